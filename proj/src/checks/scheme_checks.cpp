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

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "spacetime/checks/checks.hpp"
#include "spacetime/errors.hpp"

namespace spacetime {

namespace {

bool subset(const PositionSet& a, const PositionSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// H contains G as an induced-subgraph prefix: internals with their states,
// edges, and no vertex of G missing from H.
bool below(const PortGraph& g, const PortGraph& h) {
  for (const auto& [v, s] : g.internal()) {
    auto it = h.internal().find(v);
    if (it == h.internal().end() || it->second != s) return false;
  }
  for (const auto& e : g.edges())
    if (!h.edges().count(e)) return false;
  for (const auto& v : g.border())
    if (!h.has_vertex(v)) return false;
  return true;
}

std::string letters_key(const PositionSet& s) {
  std::string k;
  for (const auto& p : s) k += std::to_string(p.str().size()) + ":" + p.str();
  return k;
}

}  // namespace

PropertyReport check_extensivity(const NeighbourhoodScheme& scheme, const PortGraph& g,
                                 const PositionSet& omega, const ExtensivityOptions& opts) {
  PropertyReport r("extensivity");
  r.note("quantifies over induced subgraphs G_Y of the test graph");
  PositionSet n = neighbourhood(scheme, omega, g);
  PortGraph core = induced_subgraph(g, n);
  std::vector<Position> free;
  for (const auto& p : g.positions())
    if (!n.count(p)) free.push_back(p);

  auto probe = [&](const PositionSet& y) {
    ++r.cases;
    PortGraph h = induced_subgraph(g, y);
    json w;
    w["omega"] = positions_to_json(omega);
    w["Y"] = positions_to_json(y);
    if (!below(core, h)) {
      w["reason"] = "G_N is not below H";
      r.fail(w);
      return;
    }
    try {
      PositionSet m = neighbourhood(scheme, omega, h);
      if (m == n) return;
      w["expected"] = positions_to_json(n);
      w["got"] = positions_to_json(m);
    } catch (const SchemeContractBroken& e) {
      w["reason"] = e.what();
    }
    r.fail(w);
  };

  auto build = [&](std::uint64_t mask) {
    PositionSet y = n;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1) y.insert(free[i]);
    return y;
  };
  bool exhaustive = free.size() < 63 && (std::uint64_t{1} << free.size()) <= opts.exhaustive_limit;
  if (exhaustive) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) probe(build(mask));
  } else {
    r.note("Y sampled: " + std::to_string(opts.samples) + " subsets, seed " + std::to_string(opts.seed));
    std::mt19937_64 rng(opts.seed);
    probe(build(0));
    for (std::size_t s = 0; s < opts.samples; ++s) {
      PositionSet y = n;
      for (const auto& p : free)
        if (rng() & 1) y.insert(p);
      probe(y);
    }
  }
  r.finalize();
  return r;
}

PropertyReport check_monotony(const NeighbourhoodScheme& scheme, const LocalRule& rule,
                              const PortGraph& g, int budget) {
  PropertyReport r("monotony");
  r.note("decompositions with empty leading part only");
  auto alphas = sequence_states(rule, g, budget);

  std::map<std::string, PositionSet> whole_cache;
  auto whole = [&](const PositionSet& s) -> const PositionSet& {
    auto k = letters_key(s);
    auto it = whole_cache.find(k);
    if (it == whole_cache.end()) it = whole_cache.emplace(k, neighbourhood(scheme, s, g)).first;
    return it->second;
  };

  // Letter sets of valid continuations, per cut and remaining length.
  std::map<std::pair<std::string, int>, std::vector<PositionSet>> memo;
  for (const auto& a : alphas) {
    int rest = budget - static_cast<int>(a.witness.size());
    std::string key = canonical_key(a.graph);
    auto it = memo.find({key, rest});
    if (it == memo.end()) {
      std::set<PositionSet> sets;
      for (const auto& b : sequence_states(rule, a.graph, rest)) sets.insert(b.letters);
      it = memo.emplace(std::make_pair(key, rest), std::vector<PositionSet>(sets.begin(), sets.end())).first;
    }
    for (const auto& beta : it->second) {
      ++r.cases;
      PositionSet lhs = neighbourhood(scheme, beta, a.graph);
      PositionSet all = a.letters;
      all.insert(beta.begin(), beta.end());
      const PositionSet& rhs = whole(all);
      if (subset(lhs, rhs)) continue;
      json w;
      w["alpha"] = sequence_to_json(a.witness);
      w["beta_letters"] = positions_to_json(beta);
      w["after"] = positions_to_json(lhs);
      w["before"] = positions_to_json(rhs);
      r.fail(w);
    }
  }
  r.finalize();
  return r;
}

PropertyReport check_privacy(const NeighbourhoodScheme& scheme, const LocalRule& rule,
                             const PortGraph& g, int budget) {
  PropertyReport r("privacy");
  std::set<PositionSet> family;
  for (const auto& s : sequence_states(rule, g, budget))
    if (!s.letters.empty()) family.insert(s.letters);
  std::vector<PositionSet> sets(family.begin(), family.end());
  std::vector<PositionSet> hood, inner;
  for (const auto& s : sets) {
    hood.push_back(neighbourhood(scheme, s, g));
    inner.push_back(interior(g, hood.back()));
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      bool disjoint = std::none_of(sets[i].begin(), sets[i].end(),
                                   [&](const Position& p) { return sets[j].count(p) != 0; });
      if (!disjoint) continue;
      ++r.cases;
      PositionSet shared;
      std::set_intersection(inner[j].begin(), inner[j].end(), hood[i].begin(), hood[i].end(),
                            std::inserter(shared, shared.end()));
      if (shared.empty()) continue;
      json w;
      w["omega"] = positions_to_json(sets[i]);
      w["omega2"] = positions_to_json(sets[j]);
      w["shared"] = positions_to_json(shared);
      r.fail(w);
    }
  r.finalize();
  return r;
}

std::vector<SequenceState> sequence_states(const LocalRule& rule, const PortGraph& g, int budget,
                                           std::size_t max_states) {
  std::map<std::string, SequenceState> seen;
  auto key_of = [](const PortGraph& h, const PositionSet& l) {
    return canonical_key(h) + "#" + letters_key(l);
  };
  std::string k0 = key_of(g, {});
  seen.emplace(k0, SequenceState{g, {}, Sequence()});
  std::vector<std::string> frontier{k0};
  std::vector<std::string> order{k0};
  for (int depth = 0; depth < budget && !frontier.empty(); ++depth) {
    std::set<std::string> fresh;
    for (const auto& fk : frontier) {
      const SequenceState cur = seen.at(fk);
      for (const auto& x : internal_past_positions(cur.graph)) {
        PortGraph next = apply(rule, x, cur.graph);
        PositionSet letters = cur.letters;
        letters.insert(x);
        std::string k = key_of(next, letters);
        Sequence cand = cur.witness.then(x);
        auto it = seen.find(k);
        if (it == seen.end()) {
          seen.emplace(k, SequenceState{std::move(next), std::move(letters), std::move(cand)});
          fresh.insert(k);
          if (seen.size() > max_states)
            throw BudgetExceeded("more than " + std::to_string(max_states) + " sequence states");
        } else if (fresh.count(k) && cand < it->second.witness) {
          it->second.witness = std::move(cand);
        }
      }
    }
    frontier.assign(fresh.begin(), fresh.end());
    order.insert(order.end(), frontier.begin(), frontier.end());
  }
  std::vector<SequenceState> out;
  out.reserve(seen.size());
  for (const auto& k : order) out.push_back(seen.at(k));
  std::stable_sort(out.begin(), out.end(), [](const SequenceState& a, const SequenceState& b) {
    if (a.witness.size() != b.witness.size()) return a.witness.size() < b.witness.size();
    return a.witness < b.witness;
  });
  return out;
}

Sequence random_valid_sequence(const LocalRule& rule, const PortGraph& g, int max_len,
                               std::mt19937_64& rng) {
  int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
  PortGraph cur = g;
  Sequence s;
  for (int i = 0; i < len; ++i) {
    PositionSet past = internal_past_positions(cur);
    if (past.empty()) break;
    auto it = past.begin();
    std::advance(it, static_cast<long>(rng() % past.size()));
    s = s.then(*it);
    cur = apply(rule, *it, cur);
  }
  return s;
}

}  // namespace spacetime
