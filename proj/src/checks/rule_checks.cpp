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

#include <algorithm>

#include "spacetime/checks/checks.hpp"
#include "spacetime/errors.hpp"

namespace spacetime {

PropertyReport check_commutativity(const LocalRule& rule, const PortGraph& g) {
  PropertyReport r("commutativity");
  PositionSet en = enabled(rule, g);
  std::vector<Position> xs(en.begin(), en.end());
  std::vector<PortGraph> once;
  for (const auto& x : xs) once.push_back(apply(rule, x, g));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      ++r.cases;
      PortGraph xy = apply(rule, xs[i], once[j]);
      PortGraph yx = apply(rule, xs[j], once[i]);
      if (xy == yx) continue;
      json w;
      w["x"] = xs[i].str();
      w["y"] = xs[j].str();
      w["xy"] = graph_to_json(xy);
      w["yx"] = graph_to_json(yx);
      r.fail(w);
    }
  r.finalize();
  return r;
}

PropertyReport check_time_increasing(const LocalRule& rule, const PortGraph& g, const Position& x) {
  PropertyReport r("time-increasing");
  PortGraph h = apply(rule, x, g);
  bool trivial = h == g;
  for (const auto& p : g.positions()) {
    auto before = g.vertex_at(p);
    auto after = h.vertex_at(p);
    if (!before || !after) continue;
    ++r.cases;
    bool ok = p == x && !trivial ? before->t < after->t : before->t <= after->t;
    if (ok) continue;
    json w;
    w["fired"] = x.str();
    w["position"] = p.str();
    w["before"] = before->str();
    w["after"] = after->str();
    r.fail(w);
  }
  r.finalize();
  return r;
}

PropertyReport check_locality(const LocalRule& rule, const PortGraph& g, const Sequence& omega) {
  if (!is_valid(rule, omega, g)) throw InvalidSequence("sequence " + omega.str() + " is not valid");
  PropertyReport r("locality");
  auto differs = [&](const Sequence& s) {
    PositionSet n = neighbourhood(rule.scheme, s.letter_set(), g);
    PortGraph whole = apply_sequence(rule, s, g);
    PortGraph local = apply_sequence(rule, s, induced_subgraph(g, n));
    try {
      return join(local, induced_subgraph(g, complement(g, n))) != whole;
    } catch (const IncompatibleJoin&) {
      return true;
    }
  };
  ++r.cases;
  if (differs(omega)) {
    Sequence small = shrink(omega, [&](const Sequence& s) { return is_valid(rule, s, g) && differs(s); });
    json w;
    w["sequence"] = sequence_to_json(small);
    w["original"] = sequence_to_json(omega);
    r.fail(w);
  }
  r.finalize();
  return r;
}

PropertyReport check_port_decreasing(const LocalRule& rule, const PortOrder& order,
                                     const PortGraph& g, const Position& x) {
  PropertyReport r("port-decreasing");
  r.note("the changed-neighbourhood condition compares G_u with (A_x G)_u");
  PortGraph h = apply(rule, x, g);
  if (h == g) return r;
  PositionSet inner = interior(g, neighbourhood(rule.scheme, PositionSet{x}, g));
  for (const auto& u : g.vertices()) {
    if (!h.has_vertex(u)) continue;
    if (neighbourhood_of(g, u) == neighbourhood_of(h, u)) continue;
    ++r.cases;
    EdgeSet priv = edges_from_set(g, inner, u);
    PortSet lhs;
    for (const auto& e : priv) lhs.insert(e.to.port);
    std::vector<Port> rhs;
    for (const auto& e : priv)
      if (h.edges().count(e)) rhs.push_back(e.to.port);
    for (const auto& e : h.incoming(u))
      if (!g.edges().count(e)) rhs.push_back(e.to.port);
    if (compare_port_multisets(order, std::vector<Port>(lhs.begin(), lhs.end()), rhs) ==
        std::weak_ordering::greater)
      continue;
    json w;
    w["fired"] = x.str();
    w["vertex"] = u.str();
    w["before"] = ports_to_json(lhs);
    json after = json::array();
    std::sort(rhs.begin(), rhs.end());
    for (const auto& p : rhs) after.push_back(p.str());
    w["after"] = after;
    r.fail(w);
  }
  r.finalize();
  return r;
}

PropertyReport check_confluence(const LocalRule& rule, const PortGraph& g, const Sequence& omega,
                                const Sequence& omega2) {
  for (const Sequence* s : {&omega, &omega2})
    if (!is_valid(rule, *s, g)) throw InvalidSequence("sequence " + s->str() + " is not valid");
  PropertyReport r("confluence");
  ++r.cases;
  auto d1 = subtract_detailed(omega2, omega);
  auto d2 = subtract_detailed(omega, omega2);
  PortGraph g1 = apply_sequence(rule, omega, g);
  PortGraph g2 = apply_sequence(rule, omega2, g);
  json w;
  w["omega"] = sequence_to_json(omega);
  w["omega2"] = sequence_to_json(omega2);
  if (!is_valid(rule, d1.result, g1) || !is_valid(rule, d2.result, g2)) {
    w["reason"] = "subtracted sequence not valid";
    r.fail(w);
  } else if (apply_sequence(rule, d1.result, g1) != apply_sequence(rule, d2.result, g2)) {
    w["reason"] = "different results";
    r.fail(w);
  }
  r.finalize();
  return r;
}

Sequence shrink(const Sequence& s, const std::function<bool(const Sequence&)>& still_fails) {
  Sequence cur = s;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < cur.letters.size(); ++i) {
      Sequence cand = cur;
      cand.letters.erase(cand.letters.begin() + static_cast<std::ptrdiff_t>(i));
      if (still_fails(cand)) {
        cur = std::move(cand);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

}  // namespace spacetime
