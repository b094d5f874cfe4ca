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

#include <map>
#include <tuple>

#include "spacetime/checks/checks.hpp"
#include "spacetime/parallel.hpp"

namespace spacetime {

namespace {

const char* consistency_name(bool weak) { return weak ? "weak-consistency" : "consistency"; }

// One (vertex, incoming ports) observation in one cut.
struct Observation {
  Name v;
  PortSet ports;
  std::string local_key;
  StateToken state;
};

std::vector<Observation> observe(const PortGraph& g, bool weak) {
  std::map<Name, PortSet> in;
  for (const auto& e : g.edges()) in[e.to.vertex].insert(e.to.port);
  std::vector<Observation> out;
  for (const auto& [v, s] : g.internal()) {
    auto it = in.find(v);
    PortSet ports = it == in.end() ? PortSet{} : it->second;
    if (weak && !ports.empty()) continue;
    out.push_back({v, std::move(ports), canonical_key(neighbourhood_of(g, v)), s});
  }
  return out;
}

std::string ports_key(const PortSet& p) {
  std::string k;
  for (const auto& x : p) k += std::to_string(x.str().size()) + ":" + x.str();
  return k;
}

}  // namespace

PropertyReport check_pair_consistency(const PortGraph& g, const PortGraph& h, bool weak) {
  PropertyReport r(consistency_name(weak));
  auto og = observe(g, weak);
  std::map<Name, const Observation*> by_name;
  for (const auto& o : og) by_name[o.v] = &o;
  for (const auto& o : observe(h, weak)) {
    auto it = by_name.find(o.v);
    if (it == by_name.end() || it->second->ports != o.ports) continue;
    ++r.cases;
    if (it->second->local_key == o.local_key) continue;
    json w;
    w["vertex"] = o.v.str();
    w["incoming_ports"] = ports_to_json(o.ports);
    w["state_a"] = it->second->state.str();
    w["state_b"] = o.state.str();
    r.fail(w);
  }
  r.finalize();
  return r;
}

PropertyReport check_diagram_consistency(const DiagramSet& ds, bool weak, int jobs) {
  PropertyReport r(consistency_name(weak));
  std::vector<const Cut*> cuts;
  for (const auto& [k, c] : ds.cuts) cuts.push_back(&c);
  auto obs = parallel_map(cuts.size(), jobs, [&](std::size_t i) { return observe(cuts[i]->graph, weak); });

  // (vertex, ports) -> local key -> first cut showing it, in key order.
  using Group = std::map<std::string, std::pair<const Cut*, const Observation*>>;
  std::map<std::pair<Name, std::string>, Group> groups;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (const auto& o : obs[i]) {
      ++r.cases;
      groups[{o.v, ports_key(o.ports)}].emplace(o.local_key, std::make_pair(cuts[i], &o));
    }
  }
  for (const auto& [id, group] : groups) {
    if (group.size() < 2) continue;
    auto first = group.begin();
    for (auto it = std::next(first); it != group.end(); ++it) {
      json w;
      w["vertex"] = id.first.str();
      w["incoming_ports"] = ports_to_json(first->second.second->ports);
      w["cut_a"] = sequence_to_json(first->second.first->witness);
      w["cut_b"] = sequence_to_json(it->second.first->witness);
      w["state_a"] = first->second.second->state.str();
      w["state_b"] = it->second.second->state.str();
      r.fail(w);
    }
  }
  r.finalize();
  return r;
}

PropertyReport check_past_determines_cut(const DiagramSet& ds) {
  PropertyReport r("past-determines-cut");
  std::map<std::string, const Cut*> seen;
  for (const auto& [k, c] : ds.cuts) {
    ++r.cases;
    std::string key;
    for (const auto& v : past(c.graph)) key += v.str() + ";";
    auto [it, fresh] = seen.emplace(key, &c);
    if (fresh) continue;
    json w;
    json p = json::array();
    for (const auto& v : past(c.graph)) p.push_back(v.str());
    w["past"] = p;
    w["cut_a"] = sequence_to_json(it->second->witness);
    w["cut_b"] = sequence_to_json(c.witness);
    r.fail(w);
  }
  r.finalize();
  return r;
}

PropertyReport check_common_past(const DiagramSet& ds) {
  PropertyReport r("common-past");
  std::map<Name, std::pair<std::size_t, const Cut*>> seen;
  for (const auto& [k, c] : ds.cuts) {
    for (const auto& v : past(c.graph)) {
      ++r.cases;
      std::size_t n = c.witness.count(v.x);
      auto [it, fresh] = seen.emplace(v, std::make_pair(n, &c));
      if (fresh || it->second.first == n) continue;
      json w;
      w["vertex"] = v.str();
      w["cut_a"] = sequence_to_json(it->second.second->witness);
      w["cut_b"] = sequence_to_json(c.witness);
      w["count_a"] = it->second.first;
      w["count_b"] = n;
      r.fail(w);
    }
  }
  r.finalize();
  return r;
}

}  // namespace spacetime
