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

#ifndef SPACETIME_RULES_CA_HPP_
#define SPACETIME_RULES_CA_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spacetime/rewriting/rule.hpp"

namespace spacetime {

// f : alphabet x alphabet -> alphabet.
struct TruthTable {
  std::vector<std::string> alphabet;
  std::map<std::pair<std::string, std::string>, std::string> map;

  // Throws ParseError unless the table is total over a well-formed alphabet.
  void check() const;
  const std::string& operator()(const std::string& l, const std::string& r) const;

  static TruthTable from_json(const nlohmann::ordered_json& j);
  nlohmann::ordered_json to_json() const;

  static TruthTable xor_table();
  // Uniformly random table over {0,1}.
  static TruthTable random_binary(std::uint64_t seed);
  // Same table with the entry (l, r) mapped to the next alphabet symbol.
  TruthTable corrupted(const std::string& l, const std::string& r) const;
};

TruthTable read_truth_table(const std::string& path);

// Token "left|right"; "." is the empty slot.
struct CAState {
  std::optional<std::string> left, right;

  static CAState parse(const StateToken& s);
  StateToken token() const;
  bool full() const { return left && right; }
};

inline const char* kEmptySlot = ".";

LocalRule make_ca_rule(const TruthTable& table);

// Ring: m cells on 2m columns. Line: m cells on 2(m-1) columns with borders.
// Column 2j starts as (s_j, s_{j+1}); odd columns start empty.
PortGraph make_ca_initial(const TruthTable& table, const std::vector<std::string>& config,
                          bool periodic);

// Cells encoded by `width` columns: width/2 on a ring, width/2 + 1 on a line.
int ca_cells_for_width(int width, bool periodic);

}  // namespace spacetime

#endif  // SPACETIME_RULES_CA_HPP_
