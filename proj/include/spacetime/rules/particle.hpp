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

#ifndef SPACETIME_RULES_PARTICLE_HPP_
#define SPACETIME_RULES_PARTICLE_HPP_

#include <cstddef>
#include <set>
#include <utility>

#include "spacetime/rewriting/rule.hpp"
#include "spacetime/rules/lattice.hpp"

namespace spacetime {

// Token "lr": l = left-mover present, r = right-mover present.
struct ParticleState {
  bool l = false;
  bool r = false;

  // Throws StateTypeMismatch.
  static ParticleState parse(const StateToken& s);
  StateToken token() const;

  friend bool operator==(const ParticleState&, const ParticleState&) = default;
};

enum class Direction { Left, Right };

LocalRule particle_rule();

// Movers sit on odd (awaiting) columns; an even index throws BadIndex, as
// does an index outside [0, n) and a right-mover on a free right end.
PortGraph make_particle_line(int n, const std::set<int>& right_movers,
                             const std::set<int>& left_movers, bool periodic,
                             lattice::Boundary line_boundary = lattice::Boundary::Border);

std::set<std::pair<Position, Direction>> decode_particles(const PortGraph& g);

std::size_t count_retirements(const Sequence& schedule, const Position& x);

}  // namespace spacetime

#endif  // SPACETIME_RULES_PARTICLE_HPP_
