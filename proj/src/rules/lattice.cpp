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

#include "spacetime/rules/lattice.hpp"

#include "spacetime/errors.hpp"

namespace spacetime::lattice {

std::string column_token(const std::string& prefix, int k) {
  return prefix + std::to_string(k);
}

std::optional<int> column_index(const std::string& prefix, const Position& x) {
  const std::string& s = x.str();
  if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  // "x01" is not a column token.
  if (s.size() - prefix.size() > 1 && s[prefix.size()] == '0') return std::nullopt;
  int k = 0;
  for (std::size_t i = prefix.size(); i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    k = k * 10 + (s[i] - '0');
  }
  return k;
}

PortGraph build(const std::string& prefix, const std::vector<StateToken>& states,
                Boundary boundary) {
  const int n = static_cast<int>(states.size());
  if (n < 3) throw BadIndex("a lattice needs at least 3 columns, got " + std::to_string(n));
  if (boundary == Boundary::Ring && (n % 2 != 0 || n < 4))
    throw BadIndex("a ring needs an even number of columns >= 4, got " + std::to_string(n));

  PortGraph g;
  auto name = [&](int k) { return Name(0, Position(column_token(prefix, k))); };
  for (int k = 0; k < n; ++k) g.add_internal(name(k), states[k]);
  for (int k = 0; k < n; k += 2) {
    if (k + 1 < n) g.add_edge(Edge(name(k), "a", name(k + 1), "a'"));
    if (k > 0) g.add_edge(Edge(name(k), "b", name(k - 1), "b'"));
  }
  if (boundary == Boundary::Ring) g.add_edge(Edge(name(0), "b", name(n - 1), "b'"));
  if (boundary == Boundary::Border) {
    Name l(0, Position("L")), r(0, Position("R"));
    g.add_border(l).add_border(r);
    g.add_edge(Edge(l, "a", name(0), "a'"));
    g.add_edge(Edge(r, "b", name(n - 1), "b'"));
  }
  return g;
}

Site read_site(const PortGraph& local, const Position& x) {
  auto u = local.internal_at(x);
  if (!u) throw ShapeMismatch("no internal vertex at " + x.str());
  Site s;
  s.u = *u;
  for (const auto& e : local.edges()) {
    if (e.to.vertex == *u) throw ShapeMismatch(u->str() + " is not past");
    if (e.from.vertex != *u) continue;
    if (!local.is_internal(e.to.vertex))
      throw ShapeMismatch(u->str() + " points at non-internal " + e.to.vertex.str());
    if (e.from.port == kB && e.to.port == kB1 && !s.left_edge) {
      s.left_edge = e;
      s.left = e.to.vertex;
    } else if (e.from.port == kA && (e.to.port == kA1 || e.to.port == kB2) && !s.right_edge) {
      s.right_edge = e;
      s.right = e.to.vertex;
    } else {
      throw ShapeMismatch("unexpected edge " + e.str());
    }
  }
  if (!s.left_edge && !s.right_edge) throw ShapeMismatch(u->str() + " has no neighbours");
  return s;
}

Name flip(PortGraph& g, const Site& site, const StateToken& s, bool hold_right) {
  Name next = site.u.shifted(1);
  g.remove_vertex(site.u);
  g.add_internal(next, s);
  if (site.left) g.add_edge(Edge(*site.left, "a", next, "a'"));
  if (site.right) {
    if (hold_right)
      g.add_edge(Edge(next, "a", *site.right, "b''"));
    else
      g.add_edge(Edge(*site.right, "b", next, "b'"));
  }
  return next;
}

}  // namespace spacetime::lattice
