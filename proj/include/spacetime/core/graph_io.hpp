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

#ifndef SPACETIME_CORE_GRAPH_IO_HPP_
#define SPACETIME_CORE_GRAPH_IO_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "spacetime/core/graph.hpp"

namespace spacetime {

using json = nlohmann::ordered_json;

// Without explicit ports, the ports used by the edges are listed.
json graph_to_json(const PortGraph& g, const std::optional<PortSet>& ports = std::nullopt);
// Throws ParseError on malformed input. Does not validate.
PortGraph graph_from_json(const json& j);
PortGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const PortGraph& g);

json name_to_json(const Name& n);
json edge_to_json(const Edge& e);
json validation_to_json(const ValidationReport& r);

// Compact, length-prefixed serialization. Equal graphs <=> equal keys.
std::string canonical_key(const PortGraph& g);
// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv64_hex(const std::string& s);

}  // namespace spacetime

#endif  // SPACETIME_CORE_GRAPH_IO_HPP_
