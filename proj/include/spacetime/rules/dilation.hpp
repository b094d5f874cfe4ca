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

#ifndef SPACETIME_RULES_DILATION_HPP_
#define SPACETIME_RULES_DILATION_HPP_

#include <optional>
#include <set>

#include "spacetime/rewriting/rule.hpp"

namespace spacetime {

inline const StateToken kGreen{"green"}, kRed{"red"};

inline bool is_colored(const StateToken& s) { return s == kGreen || s == kRed; }

// Particle rule plus one coloured column that alternates green/red and, when
// red, keeps its right neighbour waiting for one more of its own firings.
// Weights: b'' = 1, every other port 2.
LocalRule dilation_rule();

// Line with reflecting free ends; `colored` must be an even column.
// Throws BadIndex.
PortGraph make_dilation_line(int n, std::optional<int> colored, const std::set<int>& right_movers,
                             const std::set<int>& left_movers,
                             const StateToken& initial_color = kRed, bool periodic = false);

}  // namespace spacetime

#endif  // SPACETIME_RULES_DILATION_HPP_
