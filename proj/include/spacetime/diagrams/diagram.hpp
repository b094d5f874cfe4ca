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

#ifndef SPACETIME_DIAGRAMS_DIAGRAM_HPP_
#define SPACETIME_DIAGRAMS_DIAGRAM_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "spacetime/core/graph_io.hpp"
#include "spacetime/rewriting/rule.hpp"

namespace spacetime {

struct Cut {
  PortGraph graph;
  // Lexicographically least among the shortest sequences reaching the cut.
  Sequence witness;
};

// Cuts reachable from the seed by valid sequences of length <= budget.
struct DiagramSet {
  PortGraph seed;
  std::map<std::string, Cut> cuts;  // by canonical key
  int budget = 0;

  std::size_t size() const { return cuts.size(); }
  bool contains(const PortGraph& g) const { return cuts.count(canonical_key(g)) != 0; }
};

struct EnumerateOptions {
  int jobs = 1;
  std::size_t max_cuts = 1000000;
};

// Breadth-first closure with deduplication. Throws BudgetExceeded when more
// than max_cuts cuts are found.
DiagramSet enumerate(const LocalRule& rule, const PortGraph& g, int budget,
                     const EnumerateOptions& opts = {});

struct Background {
  NameSet vertices;
  EdgeSet arcs;
  std::map<Name, std::set<StateToken>> state_history;
};

Background background(const DiagramSet& ds);

// (final cut, sequence applied). policy is "round-robin" or "random:<seed>".
// Throws Starved, or ParseError on an unknown policy.
std::pair<PortGraph, Sequence> max_schedule(const LocalRule& rule, const PortGraph& g, int n,
                                            const std::string& policy);

}  // namespace spacetime

#endif  // SPACETIME_DIAGRAMS_DIAGRAM_HPP_
