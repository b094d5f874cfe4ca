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

#include "spacetime/rules/fixtures.hpp"

#include <string>

#include "spacetime/rules/particle.hpp"

namespace spacetime::fixtures {

PortGraph diamond() {
  auto n = [](int k) { return Name(k, Position("x" + std::to_string(k))); };
  PortGraph g;
  for (int k : {0, 1, 2, 3, 4, 7}) g.add_internal(n(k), StateToken("s" + std::to_string(k)));
  g.add_border(n(5)).add_border(n(6));
  g.add_edge(Edge(n(0), "a", n(1), "b"))
      .add_edge(Edge(n(1), "c", n(4), "b"))
      .add_edge(Edge(n(1), "a", n(3), "c"))
      .add_edge(Edge(n(2), "a", n(3), "b"))
      .add_edge(Edge(n(3), "d", n(4), "c"))
      .add_edge(Edge(n(3), "e", n(6), "a"))
      .add_edge(Edge(n(3), "a", n(7), "a"))
      .add_edge(Edge(n(4), "a", n(5), "a"));
  return g;
}

std::pair<PortGraph, PortGraph> weak_not_full() {
  Name u(0, Position("u")), v(0, Position("v")), w(0, Position("w")), z(0, Position("z"));
  PortGraph g;
  g.add_internal(u, StateToken("00"))
      .add_internal(v, StateToken("10"))
      .add_internal(w, StateToken("00"))
      .add_internal(z, StateToken("00"))
      .add_edge(Edge(u, "a", v, "a'"))
      .add_edge(Edge(u, "b", w, "b'"))
      .add_edge(Edge(v, "a", z, "a'"))
      .add_edge(Edge(w, "b", z, "b'"));
  PortGraph h;
  h.add_internal(u, StateToken("00"))
      .add_internal(v, StateToken("01"))
      .add_internal(z, StateToken("11"))
      .add_border(w)
      .add_edge(Edge(u, "a", v, "a'"))
      .add_edge(Edge(u, "b", w, "b'"))
      .add_edge(Edge(v, "a", z, "a'"));
  return {g, h};
}

std::pair<PortGraph, PortGraph> mover_absorbed() {
  PortGraph h = make_particle_line(6, {1}, {}, true);
  return {h, apply(particle_rule(), Position("x2"), h)};
}

}  // namespace spacetime::fixtures
