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

#ifndef SPACETIME_RULES_FIXTURES_HPP_
#define SPACETIME_RULES_FIXTURES_HPP_

#include <utility>

#include "spacetime/core/graph.hpp"

// Small hand-built graphs used by tests, docs and the CLI.
namespace spacetime::fixtures {

// Eight vertices t_k.x_k (t_k = k) over ports a..e: x0..x4 and x7 internal,
// x5 and x6 border.
PortGraph diamond();

// Two cuts that agree on every past vertex but where v, with the same single
// incoming port in both, carries different states.
std::pair<PortGraph, PortGraph> weak_not_full();

// Width-6 ring with a right-mover at column 1, and the cut after column 2
// fired and absorbed it.
std::pair<PortGraph, PortGraph> mover_absorbed();

}  // namespace spacetime::fixtures

#endif  // SPACETIME_RULES_FIXTURES_HPP_
