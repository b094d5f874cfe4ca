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

#include "spacetime/core/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spacetime/errors.hpp"

namespace spacetime {

json name_to_json(const Name& n) {
  json j;
  j["t"] = n.t;
  j["x"] = n.x.str();
  return j;
}

namespace {

json endpoint_to_json(const Endpoint& e) {
  json j = name_to_json(e.vertex);
  j["port"] = e.port.str();
  return j;
}

Name name_from_json(const json& j) {
  if (!j.is_object() || !j.contains("t") || !j.contains("x"))
    throw ParseError("vertex needs 't' and 'x'");
  if (!j["t"].is_number_integer()) throw ParseError("timetag must be an integer");
  if (!j["x"].is_string()) throw ParseError("position must be a string");
  std::string x = j["x"].get<std::string>();
  if (x.empty()) throw ParseError("empty position token");
  return Name(j["t"].get<std::int64_t>(), Position(x));
}

Endpoint endpoint_from_json(const json& j) {
  Endpoint e{name_from_json(j), Port()};
  if (!j.contains("port") || !j["port"].is_string()) throw ParseError("endpoint needs a 'port' string");
  e.port = Port(j["port"].get<std::string>());
  return e;
}

}  // namespace

json edge_to_json(const Edge& e) {
  json j;
  j["from"] = endpoint_to_json(e.from);
  j["to"] = endpoint_to_json(e.to);
  return j;
}

json graph_to_json(const PortGraph& g, const std::optional<PortSet>& ports) {
  PortSet used;
  if (ports) {
    used = *ports;
  } else {
    for (const auto& e : g.edges()) {
      used.insert(e.from.port);
      used.insert(e.to.port);
    }
  }
  json j;
  j["ports"] = json::array();
  for (const auto& p : used) j["ports"].push_back(p.str());
  j["internal"] = json::array();
  for (const auto& [v, s] : g.internal()) {
    json o = name_to_json(v);
    o["state"] = s.str();
    j["internal"].push_back(o);
  }
  j["border"] = json::array();
  for (const auto& v : g.border()) j["border"].push_back(name_to_json(v));
  j["edges"] = json::array();
  for (const auto& e : g.edges()) j["edges"].push_back(edge_to_json(e));
  return j;
}

PortGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("graph must be a JSON object");
  PortGraph g;
  std::optional<PortSet> declared;
  if (j.contains("ports")) {
    if (!j["ports"].is_array()) throw ParseError("'ports' must be an array");
    declared.emplace();
    for (const auto& p : j["ports"]) {
      if (!p.is_string()) throw ParseError("port must be a string");
      declared->insert(Port(p.get<std::string>()));
    }
  }
  auto array = [&](const char* key) -> const json& {
    static const json empty = json::array();
    if (!j.contains(key)) return empty;
    if (!j[key].is_array()) throw ParseError(std::string("'") + key + "' must be an array");
    return j[key];
  };
  std::map<Name, int> seen;
  for (const auto& o : array("internal")) {
    Name v = name_from_json(o);
    if (!o.contains("state") || !o["state"].is_string())
      throw ParseError("internal vertex " + v.str() + " needs a 'state' string");
    // Keep duplicated internal names visible: the second copy would silently
    // overwrite the first in the map.
    if (seen[v]++) throw ParseError("internal vertex " + v.str() + " listed twice");
    g.add_internal(v, StateToken(o["state"].get<std::string>()));
  }
  for (const auto& o : array("border")) g.add_border(name_from_json(o));
  for (const auto& o : array("edges")) {
    if (!o.is_object() || !o.contains("from") || !o.contains("to"))
      throw ParseError("edge needs 'from' and 'to'");
    Edge e(endpoint_from_json(o["from"]), endpoint_from_json(o["to"]));
    if (declared && (!declared->count(e.from.port) || !declared->count(e.to.port)))
      throw ParseError("edge " + e.str() + " uses an undeclared port");
    g.add_edge(e);
  }
  return g;
}

PortGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return graph_from_json(j);
}

void write_graph_file(const std::string& path, const PortGraph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << graph_to_json(g).dump(2) << "\n";
}

json validation_to_json(const ValidationReport& r) {
  json j;
  j["ok"] = r.ok;
  j["violations"] = json::array();
  for (const auto& v : r.violations) {
    json o;
    o["invariant"] = v.invariant;
    o["witnesses"] = v.witnesses;
    j["violations"].push_back(o);
  }
  return j;
}

namespace {

void put(std::string& out, const std::string& s) {
  out += std::to_string(s.size());
  out += ':';
  out += s;
}

void put(std::string& out, const Name& n) {
  put(out, n.x.str());
  out += '@';
  out += std::to_string(n.t);
  out += ';';
}

void put(std::string& out, const Endpoint& e) {
  put(out, e.vertex);
  put(out, e.port.str());
}

}  // namespace

std::string canonical_key(const PortGraph& g) {
  std::string out;
  out.reserve(64 * (g.internal().size() + g.edges().size()));
  out += 'I';
  out += std::to_string(g.internal().size());
  out += '|';
  for (const auto& [v, s] : g.internal()) {
    put(out, v);
    put(out, s.str());
  }
  out += 'B';
  out += std::to_string(g.border().size());
  out += '|';
  for (const auto& v : g.border()) put(out, v);
  out += 'E';
  out += std::to_string(g.edges().size());
  out += '|';
  for (const auto& e : g.edges()) {
    put(out, e.from);
    out += '>';
    put(out, e.to);
  }
  return out;
}

std::string fnv64_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace spacetime
