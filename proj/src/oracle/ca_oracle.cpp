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

#include "spacetime/oracle/ca_oracle.hpp"

#include <algorithm>

#include "spacetime/errors.hpp"
#include "spacetime/rules/lattice.hpp"

namespace spacetime {

json Configurations::to_json() const {
  json j;
  j["width"] = width;
  j["periodic"] = periodic;
  j["rows"] = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c ? json(*c) : json(nullptr));
    j["rows"].push_back(r);
  }
  return j;
}

Configurations evolve(const TruthTable& table, const std::vector<std::string>& sigma0, int steps,
                      bool periodic) {
  if (sigma0.empty()) throw EmptyConfig("empty initial configuration");
  Configurations c;
  c.width = static_cast<int>(sigma0.size());
  c.periodic = periodic;
  c.rows.emplace_back(sigma0.begin(), sigma0.end());
  const int m = c.width;
  for (int t = 0; t < steps; ++t) {
    const auto& prev = c.rows.back();
    std::vector<std::optional<std::string>> next(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      int l = k - 1;
      if (l < 0) {
        if (!periodic) continue;
        l += m;
      }
      if (prev[l] && prev[k]) next[k] = table(*prev[l], *prev[k]);
    }
    c.rows.push_back(std::move(next));
  }
  return c;
}

CellRef locate(const Name& v, int cells, bool periodic) {
  auto k = lattice::column_index("f", v.x);
  if (!k || v.t < 0) throw LayoutMismatch("vertex " + v.str() + " is not on the CA lattice");
  CellRef r;
  r.time = static_cast<int>(2 * v.t + (*k % 2));
  int c = (*k + r.time) / 2 + 1;
  r.left_cell = c - 1;
  r.right_cell = c;
  if (periodic) {
    r.left_cell = ((r.left_cell % cells) + cells) % cells;
    r.right_cell = ((r.right_cell % cells) + cells) % cells;
  }
  return r;
}

namespace {

int max_time(const DiagramSet& ds, int cells, bool periodic) {
  int best = 0;
  for (const auto& [key, cut] : ds.cuts)
    for (const auto& [v, s] : cut.graph.internal()) {
      auto st = CAState::parse(s);
      if (st.left || st.right) best = std::max(best, locate(v, cells, periodic).time);
    }
  return best;
}

}  // namespace

int layers_covered(const DiagramSet& ds, int cells, bool periodic) {
  return max_time(ds, cells, periodic);
}

PropertyReport compare(const DiagramSet& ds, const TruthTable& table,
                       const std::vector<std::string>& sigma0, bool periodic) {
  PropertyReport r("ca-oracle");
  const int m = static_cast<int>(sigma0.size());
  auto rows = evolve(table, sigma0, max_time(ds, m, periodic), periodic);
  // A background vertex holds the same slots in every cut that shows them,
  // so each (vertex, state) pair is compared once.
  auto bg = background(ds);
  for (const auto& [v, states] : bg.state_history) {
    CellRef ref = locate(v, m, periodic);
    for (const auto& s : states) {
      auto st = CAState::parse(s);
      for (int side = 0; side < 2; ++side) {
        const auto& slot = side == 0 ? st.left : st.right;
        if (!slot) continue;
        ++r.cases;
        int cell = side == 0 ? ref.left_cell : ref.right_cell;
        std::optional<std::string> want;
        if (cell >= 0 && cell < m) want = rows.at(ref.time, cell);
        if (want == slot) continue;
        json w;
        w["vertex"] = v.str();
        w["slot"] = side == 0 ? "left" : "right";
        w["time"] = ref.time;
        w["cell"] = cell;
        w["got"] = *slot;
        w["expected"] = want ? json(*want) : json(nullptr);
        r.fail(w);
      }
    }
  }
  r.finalize();
  return r;
}

}  // namespace spacetime
