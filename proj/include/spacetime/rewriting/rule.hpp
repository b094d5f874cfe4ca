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

#ifndef SPACETIME_REWRITING_RULE_HPP_
#define SPACETIME_REWRITING_RULE_HPP_

#include <functional>
#include <map>
#include <string>

#include "spacetime/core/graph.hpp"
#include "spacetime/rewriting/scheme.hpp"
#include "spacetime/rewriting/sequence.hpp"

namespace spacetime {

struct LocalRule {
  std::string name;
  NeighbourhoodScheme scheme;
  PortSet ports;
  std::set<StateToken> alphabet;
  // Declared port order; ports missing here are unweighted.
  std::map<Port, int> port_weights;
  // Optional guard evaluated on the local graph; a past vertex whose guard
  // fails is left alone.
  std::function<bool(const Position&, const PortGraph&)> ready;
  // Rewrites the local graph G_{N_x} around the past vertex at x.
  std::function<PortGraph(const Position&, const PortGraph&)> rewrite;
};

// Whether apply() re-checks the rule contract and validates its output.
bool checked_apply_enabled();

// True iff x is the position of an internal vertex with no incoming edge.
bool is_internal_past(const PortGraph& g, const Position& x);
PositionSet internal_past_positions(const PortGraph& g);

// Rewrites around x when x is an internal past position and the guard holds,
// otherwise returns g. Throws RuleContractBroken.
PortGraph apply(const LocalRule& rule, const Position& x, const PortGraph& g);

// Internal past positions whose application changes the graph.
PositionSet enabled(const LocalRule& rule, const PortGraph& g);

bool is_valid(const LocalRule& rule, const Sequence& omega, const PortGraph& g);

// Right-to-left fold of apply. In strict mode an invalid sequence throws
// InvalidSequence.
PortGraph apply_sequence(const LocalRule& rule, const Sequence& omega, const PortGraph& g,
                         bool strict = false);

}  // namespace spacetime

#endif  // SPACETIME_REWRITING_RULE_HPP_
