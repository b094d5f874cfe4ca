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

#ifndef SPACETIME_CORE_GRAPH_HPP_
#define SPACETIME_CORE_GRAPH_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spacetime/core/token.hpp"

namespace spacetime {

using NameSet = std::set<Name>;
using EdgeSet = std::set<Edge>;

// (internal, border, edges, states). The mutators are for building; once
// handed to an operation a graph is treated as a value.
class PortGraph {
 public:
  PortGraph() = default;

  // Inserting an internal vertex overwrites its state if already present.
  PortGraph& add_internal(const Name& v, const StateToken& s);
  PortGraph& add_border(const Name& v);
  PortGraph& add_edge(const Edge& e);
  PortGraph& set_state(const Name& v, const StateToken& s);
  // Removes the vertex from internal and border, and every edge touching it.
  PortGraph& remove_vertex(const Name& v);
  PortGraph& remove_edge(const Edge& e);

  const std::map<Name, StateToken>& internal() const { return internal_; }
  const NameSet& border() const { return border_; }
  const EdgeSet& edges() const { return edges_; }

  bool is_internal(const Name& v) const { return internal_.count(v) != 0; }
  bool is_border(const Name& v) const { return border_.count(v) != 0; }
  bool has_vertex(const Name& v) const { return is_internal(v) || is_border(v); }
  bool empty() const { return internal_.empty() && border_.empty() && edges_.empty(); }

  // Throws UnknownVertex when v is not internal.
  const StateToken& state(const Name& v) const;

  // The internal vertex at x, if any.
  std::optional<Name> internal_at(const Position& x) const;
  // Any vertex (internal first, then border) at x.
  std::optional<Name> vertex_at(const Position& x) const;

  NameSet vertices() const;
  NameSet internal_names() const;
  PositionSet positions() const;

  std::vector<Edge> incoming(const Name& v) const;
  std::vector<Edge> outgoing(const Name& v) const;
  std::vector<Edge> touching(const Name& v) const;

  friend bool operator==(const PortGraph&, const PortGraph&) = default;

 private:
  std::map<Name, StateToken> internal_;
  NameSet border_;
  EdgeSet edges_;
};

struct Violation {
  std::string invariant;
  std::vector<std::string> witnesses;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  bool has(const std::string& invariant) const;
};

namespace invariant {
inline constexpr const char* kPartitioning = "Vertex partitioning";
inline constexpr const char* kUnicity = "Unicity of positions";
inline constexpr const char* kNonSaturation = "Port non-saturation";
inline constexpr const char* kNoBorderEdges = "No border-to-border edges";
inline constexpr const char* kBorderAttachment = "Border attachment";
inline constexpr const char* kAcyclicity = "Acyclicity";
inline constexpr const char* kEndpoints = "Edge endpoints";
}  // namespace invariant

ValidationReport validate(const PortGraph& g);

// Vertices with no incoming edge, borders included.
NameSet past(const PortGraph& g);

PositionSet positions_of(const NameSet& names);

// G_U: internal = U n I_G, every edge touching those, borders at distance 1.
PortGraph induced_subgraph(const PortGraph& g, const NameSet& u);
// G_X: all names at the positions in X.
PortGraph induced_subgraph(const PortGraph& g, const PositionSet& x);

PositionSet complement(const PortGraph& g, const PositionSet& x);

// X^-: positions of internal vertices whose whole neighbourhood lies in X.
PositionSet interior(const PortGraph& g, const PositionSet& x);

// Throws IncompatibleJoin.
PortGraph join(const PortGraph& g, const PortGraph& h);

// Throws UnknownVertex.
PortSet incoming_ports(const PortGraph& g, const Name& v);
EdgeSet edges_from_set(const PortGraph& g, const PositionSet& y, const Name& u);

// G_v over a vertex name, the graph induced by {v}.
inline PortGraph neighbourhood_of(const PortGraph& g, const Name& v) {
  return induced_subgraph(g, NameSet{v});
}

}  // namespace spacetime

#endif  // SPACETIME_CORE_GRAPH_HPP_
