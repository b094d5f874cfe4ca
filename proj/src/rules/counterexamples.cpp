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

#include "spacetime/rules/counterexamples.hpp"

#include <set>
#include <sstream>

#include "spacetime/errors.hpp"

namespace spacetime {

namespace {

// Writer sets are '+'-joined sorted position tokens; "-" is the empty set.
StateToken add_writer(const StateToken& s, const Position& x) {
  std::set<std::string> w;
  if (s.str() != "-") {
    std::stringstream in(s.str());
    std::string item;
    while (std::getline(in, item, '+')) w.insert(item);
  }
  w.insert(x.str());
  std::string out;
  for (const auto& i : w) out += (out.empty() ? "" : "+") + i;
  return StateToken(out);
}

}  // namespace

Gadget counterexample_nonprivate() {
  Gadget gd;
  Name u(0, Position("u")), v(0, Position("v")), m(0, Position("m")), w(0, Position("w"));
  gd.graph.add_internal(u, StateToken("0"))
      .add_internal(v, StateToken("0"))
      .add_internal(m, StateToken("0"))
      .add_internal(w, StateToken("-"))
      .add_edge(Edge(u, "a", m, "a'"))
      .add_edge(Edge(v, "b", m, "b'"))
      .add_edge(Edge(m, "a", w, "b'"));
  gd.scheme = reach_scheme(2);

  LocalRule& r = gd.rule;
  r.name = "cex-nonprivate";
  r.scheme = gd.scheme;
  r.ports = {Port("a"), Port("a'"), Port("b"), Port("b'")};
  r.alphabet = {StateToken("0"), StateToken("-"), StateToken("u"), StateToken("v"),
                StateToken("u+v")};
  r.port_weights = {{Port("a"), 1}, {Port("a'"), 1}, {Port("b"), 1}, {Port("b'"), 1}};
  r.rewrite = [](const Position& x, const PortGraph& local) {
    auto u = local.internal_at(x);
    if (!u) throw ShapeMismatch("no internal vertex at " + x.str());
    PortGraph out = local;
    // Vertices two hops away whose whole neighbourhood is inside local.
    std::set<Name> targets;
    for (const auto& e1 : local.outgoing(*u))
      for (const auto& e2 : local.outgoing(e1.to.vertex)) {
        const Name& y = e2.to.vertex;
        if (!local.is_internal(y)) continue;
        bool inside = true;
        for (const auto& e : local.touching(y))
          if (!local.is_internal(e.from.vertex) || !local.is_internal(e.to.vertex)) inside = false;
        if (inside) targets.insert(y);
      }
    for (const auto& y : targets) {
      out.set_state(y, add_writer(local.state(y), x));
      for (const auto& e : local.incoming(y)) {
        if (e.to.port != Port("b'")) continue;
        out.remove_edge(e);
        out.add_edge(Edge(e.from, Endpoint{y, Port("a'")}));
      }
    }
    StateToken s = local.state(*u);
    out.remove_vertex(*u);
    out.add_internal(u->shifted(1), s);
    return out;
  };
  return gd;
}

Gadget counterexample_nonportdecreasing() {
  Gadget gd;
  Name u(0, Position("u")), v(0, Position("v"));
  gd.graph.add_internal(u, StateToken("0")).add_internal(v, StateToken("0")).add_edge(Edge(u, "a", v, "b"));
  gd.scheme = distance_one_scheme();

  LocalRule& r = gd.rule;
  r.name = "cex-nonportdec";
  r.scheme = gd.scheme;
  r.ports = {Port("a"), Port("b")};
  r.alphabet = {StateToken("0"), StateToken("1")};
  r.port_weights = {{Port("a"), 1}, {Port("b"), 1}};
  r.rewrite = [](const Position& x, const PortGraph& local) {
    auto u = local.internal_at(x);
    if (!u) throw ShapeMismatch("no internal vertex at " + x.str());
    PortGraph out = local;
    for (const auto& e : local.outgoing(*u)) {
      const Name& y = e.to.vertex;
      if (!local.is_internal(y)) continue;
      out.set_state(y, StateToken(local.state(y).str() == "0" ? "1" : "0"));
    }
    return out;
  };
  return gd;
}

}  // namespace spacetime
