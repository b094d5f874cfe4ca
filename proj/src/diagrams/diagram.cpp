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

#include "spacetime/diagrams/diagram.hpp"

#include <random>
#include <vector>

#include "spacetime/errors.hpp"
#include "spacetime/parallel.hpp"

namespace spacetime {

namespace {

struct Child {
  Position x;
  PortGraph graph;
  std::string key;
};

}  // namespace

DiagramSet enumerate(const LocalRule& rule, const PortGraph& g, int budget,
                     const EnumerateOptions& opts) {
  DiagramSet ds;
  ds.seed = g;
  ds.budget = budget;
  std::string seed_key = canonical_key(g);
  ds.cuts.emplace(seed_key, Cut{g, Sequence()});
  std::vector<std::string> frontier{seed_key};

  for (int depth = 0; depth < budget && !frontier.empty(); ++depth) {
    auto expanded = parallel_map(frontier.size(), opts.jobs, [&](std::size_t i) {
      const PortGraph& cur = ds.cuts.at(frontier[i]).graph;
      std::vector<Child> out;
      for (const auto& x : internal_past_positions(cur)) {
        PortGraph next = apply(rule, x, cur);
        if (next == cur) continue;
        std::string key = canonical_key(next);
        out.push_back({x, std::move(next), std::move(key)});
      }
      return out;
    });

    // Merge in frontier order; among the cuts first seen at this depth keep
    // the least witness, which makes the result independent of job count.
    std::set<std::string> fresh;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const Sequence parent = ds.cuts.at(frontier[i]).witness;
      for (auto& c : expanded[i]) {
        Sequence cand = parent.then(c.x);
        auto it = ds.cuts.find(c.key);
        if (it == ds.cuts.end()) {
          ds.cuts.emplace(c.key, Cut{std::move(c.graph), std::move(cand)});
          fresh.insert(c.key);
          if (ds.cuts.size() > opts.max_cuts)
            throw BudgetExceeded("more than " + std::to_string(opts.max_cuts) + " cuts");
        } else if (fresh.count(c.key) && cand < it->second.witness) {
          it->second.witness = std::move(cand);
        }
      }
    }
    frontier.assign(fresh.begin(), fresh.end());
  }
  return ds;
}

Background background(const DiagramSet& ds) {
  Background bg;
  for (const auto& [key, cut] : ds.cuts) {
    for (const auto& [v, s] : cut.graph.internal()) {
      bg.vertices.insert(v);
      bg.state_history[v].insert(s);
    }
    for (const auto& v : cut.graph.border()) bg.vertices.insert(v);
    bg.arcs.insert(cut.graph.edges().begin(), cut.graph.edges().end());
  }
  return bg;
}

std::pair<PortGraph, Sequence> max_schedule(const LocalRule& rule, const PortGraph& g, int n,
                                            const std::string& policy) {
  bool round_robin = policy == "round-robin";
  std::mt19937_64 rng;
  if (!round_robin) {
    const std::string prefix = "random:";
    if (policy.compare(0, prefix.size(), prefix) != 0 || policy.size() == prefix.size())
      throw ParseError("unknown schedule policy '" + policy + "'");
    try {
      std::size_t used = 0;
      rng.seed(std::stoull(policy.substr(prefix.size()), &used));
      if (used != policy.size() - prefix.size()) throw std::invalid_argument("seed");
    } catch (const std::exception&) {
      throw ParseError("bad seed in policy '" + policy + "'");
    }
  }

  PortGraph cur = g;
  std::vector<Position> fired;
  std::optional<Position> last;
  for (int i = 0; i < n; ++i) {
    // Candidates in cyclic order after the last fired position.
    std::vector<std::pair<Position, PortGraph>> options;
    for (const auto& x : internal_past_positions(cur)) {
      PortGraph next = apply(rule, x, cur);
      if (next != cur) options.emplace_back(x, std::move(next));
    }
    if (options.empty())
      throw Starved("no enabled position after " + std::to_string(i) + " firings");
    std::size_t pick = 0;
    if (round_robin) {
      if (last) {
        pick = options.size();
        for (std::size_t k = 0; k < options.size(); ++k)
          if (*last < options[k].first) {
            pick = k;
            break;
          }
        if (pick == options.size()) pick = 0;
      }
    } else {
      pick = static_cast<std::size_t>(rng() % options.size());
    }
    last = options[pick].first;
    fired.push_back(options[pick].first);
    cur = std::move(options[pick].second);
  }
  return {cur, Sequence(std::vector<Position>(fired.rbegin(), fired.rend()))};
}

}  // namespace spacetime
