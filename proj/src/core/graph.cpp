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

#include "spacetime/core/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "spacetime/errors.hpp"

namespace spacetime {

Name parse_name(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == s.size())
    throw ParseError("bad vertex name '" + s + "', expected t.x");
  std::size_t used = 0;
  long long t = 0;
  try {
    t = std::stoll(s.substr(0, dot), &used);
  } catch (const std::exception&) {
    throw ParseError("bad timetag in '" + s + "'");
  }
  if (used != dot) throw ParseError("bad timetag in '" + s + "'");
  return Name(t, Position(s.substr(dot + 1)));
}

PortGraph& PortGraph::add_internal(const Name& v, const StateToken& s) {
  internal_[v] = s;
  return *this;
}

PortGraph& PortGraph::add_border(const Name& v) {
  border_.insert(v);
  return *this;
}

PortGraph& PortGraph::add_edge(const Edge& e) {
  edges_.insert(e);
  return *this;
}

PortGraph& PortGraph::set_state(const Name& v, const StateToken& s) {
  auto it = internal_.find(v);
  if (it == internal_.end()) throw UnknownVertex("no internal vertex " + v.str());
  it->second = s;
  return *this;
}

PortGraph& PortGraph::remove_vertex(const Name& v) {
  internal_.erase(v);
  border_.erase(v);
  for (auto it = edges_.begin(); it != edges_.end();) {
    if (it->touches(v))
      it = edges_.erase(it);
    else
      ++it;
  }
  return *this;
}

PortGraph& PortGraph::remove_edge(const Edge& e) {
  edges_.erase(e);
  return *this;
}

const StateToken& PortGraph::state(const Name& v) const {
  auto it = internal_.find(v);
  if (it == internal_.end()) throw UnknownVertex("no internal vertex " + v.str());
  return it->second;
}

std::optional<Name> PortGraph::internal_at(const Position& x) const {
  auto it = internal_.lower_bound(Name(std::numeric_limits<std::int64_t>::min(), x));
  if (it != internal_.end() && it->first.x == x) return it->first;
  return std::nullopt;
}

std::optional<Name> PortGraph::vertex_at(const Position& x) const {
  if (auto v = internal_at(x)) return v;
  auto it = border_.lower_bound(Name(std::numeric_limits<std::int64_t>::min(), x));
  if (it != border_.end() && it->x == x) return *it;
  return std::nullopt;
}

NameSet PortGraph::vertices() const {
  NameSet out = border_;
  for (const auto& [v, s] : internal_) out.insert(v);
  return out;
}

NameSet PortGraph::internal_names() const {
  NameSet out;
  for (const auto& [v, s] : internal_) out.insert(out.end(), v);
  return out;
}

PositionSet PortGraph::positions() const {
  PositionSet out;
  for (const auto& [v, s] : internal_) out.insert(v.x);
  for (const auto& v : border_) out.insert(v.x);
  return out;
}

std::vector<Edge> PortGraph::incoming(const Name& v) const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.to.vertex == v) out.push_back(e);
  return out;
}

std::vector<Edge> PortGraph::outgoing(const Name& v) const {
  // Edges are sorted by source endpoint, so the outgoing ones are contiguous.
  std::vector<Edge> out;
  Edge probe;
  probe.from.vertex = v;
  for (auto it = edges_.lower_bound(probe); it != edges_.end() && it->from.vertex == v; ++it)
    out.push_back(*it);
  return out;
}

std::vector<Edge> PortGraph::touching(const Name& v) const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.touches(v)) out.push_back(e);
  return out;
}

bool ValidationReport::has(const std::string& inv) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.invariant == inv; });
}

ValidationReport validate(const PortGraph& g) {
  ValidationReport r;
  auto add = [&](const char* inv, std::vector<std::string> w) {
    r.violations.push_back({inv, std::move(w)});
  };

  {
    std::vector<std::string> w;
    for (const auto& v : g.border())
      if (g.is_internal(v)) w.push_back(v.str());
    if (!w.empty()) add(invariant::kPartitioning, w);
  }

  {
    std::vector<std::string> w;
    NameSet all = g.vertices();
    for (auto it = all.begin(); it != all.end();) {
      auto next = std::next(it);
      if (next != all.end() && next->x == it->x) {
        auto last = it;
        while (last != all.end() && last->x == it->x) w.push_back((last++)->str());
        it = last;
      } else {
        it = next;
      }
    }
    if (!w.empty()) add(invariant::kUnicity, w);
  }

  {
    std::vector<std::string> w;
    for (const auto& e : g.edges())
      if (!g.has_vertex(e.from.vertex) || !g.has_vertex(e.to.vertex)) w.push_back(e.str());
    if (!w.empty()) add(invariant::kEndpoints, w);
  }

  {
    std::map<Endpoint, int> uses;
    for (const auto& e : g.edges()) {
      ++uses[e.from];
      ++uses[e.to];
    }
    std::vector<std::string> w;
    for (const auto& [ep, n] : uses)
      if (n > 1) w.push_back(ep.str());
    if (!w.empty()) add(invariant::kNonSaturation, w);
  }

  {
    std::vector<std::string> w;
    for (const auto& e : g.edges())
      if (g.is_border(e.from.vertex) && g.is_border(e.to.vertex) &&
          !g.is_internal(e.from.vertex) && !g.is_internal(e.to.vertex))
        w.push_back(e.str());
    if (!w.empty()) add(invariant::kNoBorderEdges, w);
  }

  {
    NameSet attached;
    for (const auto& e : g.edges()) {
      attached.insert(e.from.vertex);
      attached.insert(e.to.vertex);
    }
    std::vector<std::string> w;
    for (const auto& v : g.border())
      if (!attached.count(v)) w.push_back(v.str());
    if (!w.empty()) add(invariant::kBorderAttachment, w);
  }

  {
    // Kahn's algorithm; whatever keeps a positive indegree sits on or behind a cycle.
    std::map<Name, int> indeg;
    std::map<Name, std::vector<Name>> succ;
    for (const auto& v : g.vertices()) indeg[v];
    for (const auto& e : g.edges()) {
      indeg[e.from.vertex];
      ++indeg[e.to.vertex];
      succ[e.from.vertex].push_back(e.to.vertex);
    }
    std::deque<Name> q;
    for (const auto& [v, d] : indeg)
      if (d == 0) q.push_back(v);
    while (!q.empty()) {
      Name v = q.front();
      q.pop_front();
      for (const auto& s : succ[v])
        if (--indeg[s] == 0) q.push_back(s);
    }
    std::vector<std::string> w;
    for (const auto& [v, d] : indeg)
      if (d > 0) w.push_back(v.str());
    if (!w.empty()) add(invariant::kAcyclicity, w);
  }

  r.ok = r.violations.empty();
  return r;
}

NameSet past(const PortGraph& g) {
  NameSet targets;
  for (const auto& e : g.edges()) targets.insert(e.to.vertex);
  NameSet out;
  for (const auto& v : g.vertices())
    if (!targets.count(v)) out.insert(v);
  return out;
}

PositionSet positions_of(const NameSet& names) {
  PositionSet out;
  for (const auto& n : names) out.insert(n.x);
  return out;
}

namespace {

PortGraph induce(const PortGraph& g, const NameSet& keep) {
  PortGraph out;
  for (const auto& v : keep) out.add_internal(v, g.state(v));
  for (const auto& e : g.edges()) {
    bool f = keep.count(e.from.vertex) != 0;
    bool t = keep.count(e.to.vertex) != 0;
    if (!f && !t) continue;
    out.add_edge(e);
    if (!f) out.add_border(e.from.vertex);
    if (!t) out.add_border(e.to.vertex);
  }
  return out;
}

}  // namespace

PortGraph induced_subgraph(const PortGraph& g, const NameSet& u) {
  NameSet keep;
  for (const auto& v : u)
    if (g.is_internal(v)) keep.insert(v);
  return induce(g, keep);
}

PortGraph induced_subgraph(const PortGraph& g, const PositionSet& x) {
  NameSet keep;
  for (const auto& [v, s] : g.internal())
    if (x.count(v.x)) keep.insert(v);
  return induce(g, keep);
}

PositionSet complement(const PortGraph& g, const PositionSet& x) {
  PositionSet out;
  for (const auto& p : g.positions())
    if (!x.count(p)) out.insert(p);
  return out;
}

PositionSet interior(const PortGraph& g, const PositionSet& x) {
  PositionSet out;
  for (const auto& p : x) {
    auto v = g.internal_at(p);
    if (!v) continue;
    bool inside = true;
    for (const auto& e : g.touching(*v)) {
      if (!x.count(e.from.vertex.x) || !x.count(e.to.vertex.x)) {
        inside = false;
        break;
      }
    }
    if (inside) out.insert(p);
  }
  return out;
}

PortGraph join(const PortGraph& g, const PortGraph& h) {
  PortGraph out;
  for (const auto& [v, s] : g.internal()) out.add_internal(v, s);
  for (const auto& [v, s] : h.internal()) {
    auto it = g.internal().find(v);
    if (it != g.internal().end() && it->second != s)
      throw IncompatibleJoin("vertex " + v.str() + " has states '" + it->second.str() +
                             "' and '" + s.str() + "'");
    out.add_internal(v, s);
  }

  // An internal vertex carries all of its edges, so the other side may not
  // know about any edge on it that this side lacks.
  auto agree = [](const PortGraph& a, const PortGraph& b) {
    for (const auto& e : b.edges()) {
      for (const Name* v : {&e.from.vertex, &e.to.vertex}) {
        if (a.is_internal(*v) && !a.edges().count(e))
          throw IncompatibleJoin("edge " + e.str() + " touches " + v->str() +
                                 " which is internal on the other side without it");
      }
    }
  };
  agree(g, h);
  agree(h, g);

  for (const auto& e : g.edges()) out.add_edge(e);
  for (const auto& e : h.edges()) out.add_edge(e);
  for (const NameSet* b : {&g.border(), &h.border()})
    for (const auto& v : *b)
      if (!out.is_internal(v)) out.add_border(v);

  auto r = validate(out);
  if (!r.ok) {
    std::string msg = "join violates";
    for (const auto& v : r.violations) {
      msg += " [" + v.invariant;
      for (const auto& w : v.witnesses) msg += " " + w;
      msg += "]";
    }
    throw IncompatibleJoin(msg);
  }
  return out;
}

PortSet incoming_ports(const PortGraph& g, const Name& v) {
  if (!g.has_vertex(v)) throw UnknownVertex("no vertex " + v.str());
  PortSet out;
  for (const auto& e : g.edges())
    if (e.to.vertex == v) out.insert(e.to.port);
  return out;
}

EdgeSet edges_from_set(const PortGraph& g, const PositionSet& y, const Name& u) {
  if (!g.has_vertex(u)) throw UnknownVertex("no vertex " + u.str());
  EdgeSet out;
  for (const auto& e : g.edges())
    if (e.to.vertex == u && y.count(e.from.vertex.x)) out.insert(e);
  return out;
}

}  // namespace spacetime
