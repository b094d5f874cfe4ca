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

#ifndef SPACETIME_RULES_COUNTEREXAMPLES_HPP_
#define SPACETIME_RULES_COUNTEREXAMPLES_HPP_

#include "spacetime/rewriting/rule.hpp"

namespace spacetime {

struct Gadget {
  PortGraph graph;
  LocalRule rule;
  NeighbourhoodScheme scheme;
};

// u and v both feed m, which feeds w. Under the distance-2 scheme both u and
// v see w as interior. Firing x records x in w's writer set, moves w's
// incoming edge from b' to a' and isolates x's vertex one tick later.
Gadget counterexample_nonprivate();

// u:a -> v:b. Firing u toggles v's state and leaves u as it was.
Gadget counterexample_nonportdecreasing();

}  // namespace spacetime

#endif  // SPACETIME_RULES_COUNTEREXAMPLES_HPP_
