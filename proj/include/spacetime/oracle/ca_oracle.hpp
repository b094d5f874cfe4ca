/*
 * Copyright (c) 2026, The spacetime Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#ifndef SPACETIME_ORACLE_CA_ORACLE_HPP_
#define SPACETIME_ORACLE_CA_ORACLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "spacetime/checks/report.hpp"
#include "spacetime/diagrams/diagram.hpp"
#include "spacetime/rules/ca.hpp"

namespace spacetime {

// rows[t][k] = cell k at time t. On an open line cell k at time t only
// depends on cells >= k - t of the first row, so it is defined for k >= t.
struct Configurations {
  std::vector<std::vector<std::optional<std::string>>> rows;
  int width = 0;
  bool periodic = true;

  const std::optional<std::string>& at(int t, int k) const { return rows.at(t).at(k); }
  json to_json() const;
};

// s^{t+1}_k = f(s^t_{k-1}, s^t_k). Throws EmptyConfig.
Configurations evolve(const TruthTable& table, const std::vector<std::string>& sigma0, int steps,
                      bool periodic);

// Which oracle cells a CA-lattice vertex i.f_k stands for.
struct CellRef {
  int time = 0;
  int left_cell = 0;
  int right_cell = 0;
};

// Throws LayoutMismatch when the name is not of the form i.f<k>.
CellRef locate(const Name& v, int cells, bool periodic);

// Every filled slot of every cut against evolve().
PropertyReport compare(const DiagramSet& ds, const TruthTable& table,
                       const std::vector<std::string>& sigma0, bool periodic);

// Highest oracle row touched by any filled slot in the diagram.
int layers_covered(const DiagramSet& ds, int cells, bool periodic);

}  // namespace spacetime

#endif  // SPACETIME_ORACLE_CA_ORACLE_HPP_
