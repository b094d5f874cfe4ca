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

#ifndef SPACETIME_CHECKS_CHECKS_HPP_
#define SPACETIME_CHECKS_CHECKS_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "spacetime/checks/port_order.hpp"
#include "spacetime/checks/report.hpp"
#include "spacetime/diagrams/diagram.hpp"

namespace spacetime {

// ---- consistency -------------------------------------------------------

// For every v internal in both with equal incoming ports (weak: both empty),
// G_v and H_v must coincide.
PropertyReport check_pair_consistency(const PortGraph& g, const PortGraph& h, bool weak);
PropertyReport check_diagram_consistency(const DiagramSet& ds, bool weak, int jobs = 1);

// No two cuts with the same set of past vertices.
PropertyReport check_past_determines_cut(const DiagramSet& ds);
// Cuts sharing a past vertex t.x have witnesses with equally many x.
PropertyReport check_common_past(const DiagramSet& ds);

// ---- per-graph rule properties ----------------------------------------

PropertyReport check_commutativity(const LocalRule& rule, const PortGraph& g);
PropertyReport check_time_increasing(const LocalRule& rule, const PortGraph& g, const Position& x);
// Throws InvalidSequence when omega is not valid in g.
PropertyReport check_locality(const LocalRule& rule, const PortGraph& g, const Sequence& omega);
PropertyReport check_port_decreasing(const LocalRule& rule, const PortOrder& order,
                                     const PortGraph& g, const Position& x);
// Throws InvalidSequence when omega or omega2 is not valid in g.
PropertyReport check_confluence(const LocalRule& rule, const PortGraph& g, const Sequence& omega,
                                const Sequence& omega2);

// ---- scheme properties -------------------------------------------------

struct ExtensivityOptions {
  std::size_t exhaustive_limit = 4096;
  std::size_t samples = 256;
  std::uint64_t seed = 0;
};

// Every G_Y with N_omega(g) within Y is asked for N_omega again.
PropertyReport check_extensivity(const NeighbourhoodScheme& scheme, const PortGraph& g,
                                 const PositionSet& omega, const ExtensivityOptions& opts = {});

// Decompositions omega = beta alpha of valid sequences up to the budget:
// N_beta(A_alpha g) must lie inside N_{alpha beta}(g).
PropertyReport check_monotony(const NeighbourhoodScheme& scheme, const LocalRule& rule,
                              const PortGraph& g, int budget);

// Letter-disjoint valid sequences: the interior of one neighbourhood never
// meets the other neighbourhood.
PropertyReport check_privacy(const NeighbourhoodScheme& scheme, const LocalRule& rule,
                             const PortGraph& g, int budget);

// ---- valid sequences ---------------------------------------------------

// A valid sequence, up to its cut and letter set.
struct SequenceState {
  PortGraph graph;
  PositionSet letters;
  Sequence witness;
};

// Breadth-first over all valid sequences of length <= budget, deduplicated by
// (cut, letter set). Sorted by (length, witness). Throws BudgetExceeded past
// max_states.
std::vector<SequenceState> sequence_states(const LocalRule& rule, const PortGraph& g, int budget,
                                           std::size_t max_states = 200000);

// A random valid sequence of length <= max_len, picking uniformly among the
// internal past positions at each step.
Sequence random_valid_sequence(const LocalRule& rule, const PortGraph& g, int max_len,
                               std::mt19937_64& rng);

// Greedily drops letters while `still_fails` holds.
Sequence shrink(const Sequence& s, const std::function<bool(const Sequence&)>& still_fails);

}  // namespace spacetime

#endif  // SPACETIME_CHECKS_CHECKS_HPP_
