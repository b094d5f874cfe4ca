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

#include "spacetime/rules/particle.hpp"

#include "spacetime/errors.hpp"

namespace spacetime {

ParticleState ParticleState::parse(const StateToken& s) {
  const std::string& v = s.str();
  auto bit = [&](char c) {
    if (c != '0' && c != '1') throw StateTypeMismatch("not a particle state: '" + v + "'");
    return c == '1';
  };
  if (v.size() != 2) throw StateTypeMismatch("not a particle state: '" + v + "'");
  return {bit(v[0]), bit(v[1])};
}

StateToken ParticleState::token() const {
  return StateToken(std::string{l ? '1' : '0', r ? '1' : '0'});
}

LocalRule particle_rule() {
  LocalRule rule;
  rule.name = "particle";
  rule.scheme = distance_one_scheme();
  rule.ports = {lattice::kA, lattice::kA1, lattice::kB, lattice::kB1};
  rule.alphabet = {StateToken("00"), StateToken("01"), StateToken("10"), StateToken("11")};
  rule.rewrite = [](const Position& x, const PortGraph& local) {
    auto site = lattice::read_site(local, x);
    PortGraph out = local;
    ParticleState from_left, from_right;
    if (site.left) {
      auto v = ParticleState::parse(local.state(*site.left));
      from_left.r = v.r;
      v.r = false;
      out.set_state(*site.left, v.token());
    }
    if (site.right) {
      auto w = ParticleState::parse(local.state(*site.right));
      from_right.l = w.l;
      w.l = false;
      out.set_state(*site.right, w.token());
    }
    ParticleState next;
    if (site.left && site.right) {
      next = {from_right.l, from_left.r};
    } else if (site.right) {
      // Left free end: the incoming left-mover turns around.
      next = {false, from_right.l};
    } else {
      next = {from_left.r, false};
    }
    lattice::flip(out, site, next.token());
    return out;
  };
  return rule;
}

PortGraph make_particle_line(int n, const std::set<int>& right_movers,
                             const std::set<int>& left_movers, bool periodic,
                             lattice::Boundary line_boundary) {
  if (n < 3) throw BadIndex("particle line needs at least 3 columns");
  std::vector<ParticleState> st(static_cast<std::size_t>(n));
  auto place = [&](int k, bool right) {
    if (k < 0 || k >= n) throw BadIndex("mover index " + std::to_string(k) + " out of range");
    if (k % 2 == 0)
      throw BadIndex("mover index " + std::to_string(k) +
                     " is an even column; movers start on odd columns");
    // Nothing to the right of a free end: the mover would sit in a past vertex.
    if (right && k == n - 1 && !periodic && line_boundary == lattice::Boundary::Reflect)
      throw BadIndex("right-mover on the free right end " + std::to_string(k));
    (right ? st[k].r : st[k].l) = true;
  };
  for (int k : right_movers) place(k, true);
  for (int k : left_movers) place(k, false);
  std::vector<StateToken> tokens;
  for (const auto& s : st) tokens.push_back(s.token());
  return lattice::build("x", tokens, periodic ? lattice::Boundary::Ring : line_boundary);
}

std::set<std::pair<Position, Direction>> decode_particles(const PortGraph& g) {
  std::set<std::pair<Position, Direction>> out;
  for (const auto& [v, s] : g.internal()) {
    auto p = ParticleState::parse(s);
    if (p.r) out.emplace(v.x, Direction::Right);
    if (p.l) out.emplace(v.x, Direction::Left);
  }
  return out;
}

std::size_t count_retirements(const Sequence& schedule, const Position& x) {
  return schedule.count(x);
}

}  // namespace spacetime
