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

#include "spacetime/rewriting/scheme.hpp"

#include <deque>
#include <map>

#include "spacetime/errors.hpp"

namespace spacetime {

namespace {

// BFS over names; returns each reached name with its hop count.
std::map<Name, int> bfs(const PortGraph& g, const PositionSet& omega, int max_hops) {
  std::map<Name, int> dist;
  std::deque<Name> q;
  for (const auto& x : omega) {
    if (auto v = g.vertex_at(x)) {
      dist[*v] = 0;
      q.push_back(*v);
    }
  }
  while (!q.empty()) {
    Name v = q.front();
    q.pop_front();
    int d = dist[v];
    if (max_hops >= 0 && d >= max_hops) continue;
    for (const auto& e : g.outgoing(v)) {
      if (dist.emplace(e.to.vertex, d + 1).second) q.push_back(e.to.vertex);
    }
  }
  return dist;
}

}  // namespace

PositionSet forward_reach(const PortGraph& g, const PositionSet& omega) {
  PositionSet out = omega;
  for (const auto& [v, d] : bfs(g, omega, -1)) out.insert(v.x);
  return out;
}

PositionSet neighbourhood(const NeighbourhoodScheme& s, const PositionSet& omega,
                          const PortGraph& g) {
  PositionSet n = s.compute(omega, g);
  PositionSet reach;
  bool reach_done = false;
  for (const auto& p : n) {
    if (omega.count(p)) continue;
    if (!reach_done) {
      reach = forward_reach(g, omega);
      reach_done = true;
    }
    if (!reach.count(p))
      throw SchemeContractBroken("scheme '" + s.name + "' returned " + p.str() +
                                 " which is not reachable from the given positions");
  }
  return n;
}

NeighbourhoodScheme distance_one_scheme() {
  return {"distance-1", [](const PositionSet& omega, const PortGraph& g) {
            PositionSet out;
            for (const auto& x : omega) {
              auto v = g.vertex_at(x);
              if (!v) continue;
              out.insert(x);
              for (const auto& e : g.touching(*v)) {
                out.insert(e.from.vertex.x);
                out.insert(e.to.vertex.x);
              }
            }
            return out;
          }};
}

NeighbourhoodScheme reach_scheme(int k) {
  return {"reach-" + std::to_string(k), [k](const PositionSet& omega, const PortGraph& g) {
            PositionSet out;
            for (const auto& [v, d] : bfs(g, omega, k)) out.insert(v.x);
            return out;
          }};
}

}  // namespace spacetime
