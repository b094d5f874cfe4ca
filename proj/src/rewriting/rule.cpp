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

#include "spacetime/rewriting/rule.hpp"

#include "spacetime/errors.hpp"

namespace spacetime {

bool checked_apply_enabled() {
#if defined(SPACETIME_CHECKED_APPLY) || !defined(NDEBUG)
  return true;
#else
  return false;
#endif
}

bool is_internal_past(const PortGraph& g, const Position& x) {
  auto v = g.internal_at(x);
  if (!v) return false;
  for (const auto& e : g.edges())
    if (e.to.vertex == *v) return false;
  return true;
}

PositionSet internal_past_positions(const PortGraph& g) {
  PositionSet out;
  for (const auto& v : past(g))
    if (g.is_internal(v)) out.insert(v.x);
  return out;
}

namespace {

void check_contract(const LocalRule& rule, const Position& x, const PortGraph& local,
                    const PortGraph& out, const PositionSet& inner) {
  auto fail = [&](const std::string& why) {
    throw RuleContractBroken("rule '" + rule.name + "' at " + x.str() + ": " + why);
  };
  for (const auto& b : local.border()) {
    if (!out.is_border(b) || out.is_internal(b)) fail("border vertex " + b.str() + " was modified");
  }
  for (const auto& e : local.edges()) {
    bool on_border = local.is_border(e.from.vertex) || local.is_border(e.to.vertex);
    if (on_border && !out.edges().count(e)) fail("border edge " + e.str() + " was removed");
  }
  for (const auto& e : out.edges()) {
    bool on_border = local.is_border(e.from.vertex) || local.is_border(e.to.vertex);
    if (on_border && !local.edges().count(e)) fail("edge " + e.str() + " was added on a border vertex");
  }
  for (const auto& b : out.border())
    if (!local.is_border(b)) fail("new border vertex " + b.str());
  for (const auto& [v, s] : out.internal()) {
    if (local.has_vertex(v)) continue;
    if (!inner.count(v.x)) fail("new vertex " + v.str() + " outside the interior");
    auto old = local.vertex_at(v.x);
    if (old && old->t == v.t) fail("new vertex " + v.str() + " keeps its timetag");
  }
  auto r = validate(out);
  if (!r.ok) fail("output violates " + r.violations.front().invariant);
}

}  // namespace

PortGraph apply(const LocalRule& rule, const Position& x, const PortGraph& g) {
  if (!is_internal_past(g, x)) return g;
  PositionSet n = neighbourhood(rule.scheme, PositionSet{x}, g);
  PortGraph local = induced_subgraph(g, n);
  if (rule.ready && !rule.ready(x, local)) return g;
  PortGraph out = rule.rewrite(x, local);
  if (checked_apply_enabled()) check_contract(rule, x, local, out, interior(g, n));
  PortGraph rest = induced_subgraph(g, complement(g, n));
  try {
    return join(out, rest);
  } catch (const IncompatibleJoin& e) {
    throw RuleContractBroken("rule '" + rule.name + "' at " + x.str() +
                             ": rewritten part does not rejoin: " + e.what());
  }
}

PositionSet enabled(const LocalRule& rule, const PortGraph& g) {
  PositionSet out;
  for (const auto& x : internal_past_positions(g))
    if (apply(rule, x, g) != g) out.insert(x);
  return out;
}

bool is_valid(const LocalRule& rule, const Sequence& omega, const PortGraph& g) {
  PortGraph cur = g;
  for (auto it = omega.letters.rbegin(); it != omega.letters.rend(); ++it) {
    if (!is_internal_past(cur, *it)) return false;
    cur = apply(rule, *it, cur);
  }
  return true;
}

PortGraph apply_sequence(const LocalRule& rule, const Sequence& omega, const PortGraph& g,
                         bool strict) {
  PortGraph cur = g;
  for (auto it = omega.letters.rbegin(); it != omega.letters.rend(); ++it) {
    if (strict && !is_internal_past(cur, *it))
      throw InvalidSequence("sequence " + omega.str() + ": " + it->str() +
                            " is not an internal past position at its turn");
    cur = apply(rule, *it, cur);
  }
  return cur;
}

}  // namespace spacetime
