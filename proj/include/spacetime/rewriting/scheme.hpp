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

#ifndef SPACETIME_REWRITING_SCHEME_HPP_
#define SPACETIME_REWRITING_SCHEME_HPP_

#include <functional>
#include <string>

#include "spacetime/core/graph.hpp"

namespace spacetime {

struct NeighbourhoodScheme {
  std::string name;
  std::function<PositionSet(const PositionSet&, const PortGraph&)> compute;
};

// Runs the scheme and checks that every returned position is reachable from
// omega along edges (zero-length paths allowed). Throws SchemeContractBroken.
PositionSet neighbourhood(const NeighbourhoodScheme& s, const PositionSet& omega,
                          const PortGraph& g);

// Positions of each x's vertex and all its in- and out-neighbours, unioned
// over omega. Positions without a vertex contribute nothing.
NeighbourhoodScheme distance_one_scheme();

// Positions reachable from omega by directed paths of length <= k.
NeighbourhoodScheme reach_scheme(int k);

// Positions reachable from omega in g (the reachability contract's bound).
PositionSet forward_reach(const PortGraph& g, const PositionSet& omega);

}  // namespace spacetime

#endif  // SPACETIME_REWRITING_SCHEME_HPP_
