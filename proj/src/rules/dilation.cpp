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

#include "spacetime/rules/dilation.hpp"

#include "spacetime/errors.hpp"
#include "spacetime/rules/lattice.hpp"
#include "spacetime/rules/particle.hpp"

namespace spacetime {

namespace {

// Takes the mover heading towards u out of neighbour n. Coloured vertices
// hold no movers and are left as they are.
bool pull(PortGraph& out, const PortGraph& local, const Name& n, bool right_mover) {
  const StateToken& s = local.state(n);
  if (is_colored(s)) return false;
  auto p = ParticleState::parse(s);
  bool& bit = right_mover ? p.r : p.l;
  bool had = bit;
  bit = false;
  out.set_state(n, p.token());
  return had;
}

}  // namespace

LocalRule dilation_rule() {
  LocalRule rule;
  rule.name = "dilation";
  rule.scheme = distance_one_scheme();
  rule.ports = {lattice::kA, lattice::kA1, lattice::kB, lattice::kB1, lattice::kB2};
  for (const auto& p : rule.ports) rule.port_weights[p] = 2;
  rule.port_weights[lattice::kB2] = 1;
  rule.alphabet = {StateToken("00"), StateToken("01"), StateToken("10"), StateToken("11"),
                   kGreen, kRed};
  rule.rewrite = [](const Position& x, const PortGraph& local) {
    auto site = lattice::read_site(local, x);
    PortGraph out = local;
    bool from_left = site.left && pull(out, local, *site.left, true);
    bool from_right = site.right && pull(out, local, *site.right, false);
    const StateToken& own = local.state(site.u);
    if (own == kGreen) {
      lattice::flip(out, site, kRed);
    } else if (own == kRed) {
      lattice::flip(out, site, kGreen, /*hold_right=*/true);
    } else {
      ParticleState next;
      if (site.left && site.right)
        next = {from_right, from_left};
      else if (site.right)
        next = {false, from_right};
      else
        next = {from_left, false};
      lattice::flip(out, site, next.token());
    }
    return out;
  };
  return rule;
}

PortGraph make_dilation_line(int n, std::optional<int> colored, const std::set<int>& right_movers,
                             const std::set<int>& left_movers, const StateToken& initial_color,
                             bool periodic) {
  if (!is_colored(initial_color)) throw BadIndex("initial colour must be green or red");
  PortGraph g = make_particle_line(n, right_movers, left_movers, periodic, lattice::Boundary::Reflect);
  if (colored) {
    int c = *colored;
    if (c < 0 || c >= n || c % 2 != 0)
      throw BadIndex("coloured column " + std::to_string(c) + " must be an even column in range");
    g.set_state(Name(0, Position(lattice::column_token("x", c))), initial_color);
  }
  return g;
}

}  // namespace spacetime
