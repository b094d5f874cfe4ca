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

#ifndef SPACETIME_RULES_LATTICE_HPP_
#define SPACETIME_RULES_LATTICE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "spacetime/core/graph.hpp"

// Diamond lattice shared by the particle, CA and dilation rules.
//
// Columns 0..n-1 at positions <prefix><k>. Even columns start as past
// vertices 0.x, odd columns as vertices awaiting both neighbours. An edge
// towards the right neighbour leaves on port a and arrives on a'; an edge
// towards the left neighbour leaves on b and arrives on b'.
namespace spacetime::lattice {

enum class Boundary {
  Border,   // border vertices L, R feed the outermost columns, which never fire
  Ring,     // column n-1 is the left neighbour of column 0; n even
  Reflect,  // free ends; an end vertex turns arriving movers around
};

inline const Port kA{"a"}, kA1{"a'"}, kB{"b"}, kB1{"b'"}, kB2{"b''"};

std::string column_token(const std::string& prefix, int k);
// Column index of "<prefix><k>", or nullopt.
std::optional<int> column_index(const std::string& prefix, const Position& x);

// Throws BadIndex on a size the boundary cannot realize.
PortGraph build(const std::string& prefix, const std::vector<StateToken>& states,
                Boundary boundary);

// The fired vertex and its two neighbours as seen from a past vertex.
struct Site {
  Name u;
  std::optional<Name> left, right;
  std::optional<Edge> left_edge, right_edge;
};

// Throws ShapeMismatch unless the vertex at x is past and internal with an
// outgoing b->b' edge and/or an outgoing a->a' (or a->b'') edge to internal
// neighbours, and nothing else.
Site read_site(const PortGraph& local, const Position& x);

// Replaces u by (t+1).x carrying `s` and turns the neighbour edges around:
// v:a -> u':a' and w:b -> u':b'. With hold_right the right edge is instead
// kept pointing from u' to w as u':a -> w:b''. Returns the new name.
Name flip(PortGraph& g, const Site& site, const StateToken& s, bool hold_right = false);

}  // namespace spacetime::lattice

#endif  // SPACETIME_RULES_LATTICE_HPP_
