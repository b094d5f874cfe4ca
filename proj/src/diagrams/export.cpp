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

#include "spacetime/diagrams/export.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "spacetime/errors.hpp"

namespace spacetime {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Quoted DOT label with lines separated by the \n escape.
std::string label_lines(const std::string& first, const std::string& second) {
  std::string q = quoted(first);
  return q.substr(0, q.size() - 1) + "\\n" + quoted(second).substr(1);
}

std::string edge_line(const Edge& e) {
  return "  " + quoted(e.from.vertex.str()) + " -> " + quoted(e.to.vertex.str()) +
         " [label=" + quoted(e.from.port.str() + "→" + e.to.port.str()) + "];\n";
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw ParseError("cannot write " + p.string());
  out << text;
}

}  // namespace

std::string to_dot(const PortGraph& g, const std::string& title) {
  std::ostringstream os;
  os << "digraph " << quoted(title) << " {\n";
  for (const auto& [v, s] : g.internal())
    os << "  " << quoted(v.str()) << " [shape=ellipse, style=solid, label="
       << label_lines(v.str(), s.str()) << "];\n";
  for (const auto& v : g.border())
    os << "  " << quoted(v.str()) << " [shape=ellipse, style=dashed, label=" << quoted(v.str())
       << "];\n";
  for (const auto& e : g.edges()) os << edge_line(e);
  os << "}\n";
  return os.str();
}

std::string background_to_dot(const Background& bg) {
  std::ostringstream os;
  os << "digraph \"background\" {\n";
  for (const auto& v : bg.vertices) {
    auto it = bg.state_history.find(v);
    std::string label = quoted(v.str());
    std::string style = "dashed";
    if (it != bg.state_history.end()) {
      style = "solid";
      std::string states;
      for (const auto& s : it->second) states += (states.empty() ? "" : ",") + s.str();
      if (it->second.size() > 1) states = "{" + states + "}";
      label = label_lines(v.str(), states);
    }
    os << "  " << quoted(v.str()) << " [shape=ellipse, style=" << style << ", label=" << label
       << "];\n";
  }
  for (const auto& e : bg.arcs) os << edge_line(e);
  os << "}\n";
  return os.str();
}

std::string cut_file_name(const std::string& key) {
  return "cut_" + fnv64_hex(key) + ".json";
}

json diagram_index(const DiagramSet& ds) {
  json j;
  j["budget"] = ds.budget;
  j["cuts"] = ds.cuts.size();
  j["seed"] = cut_file_name(canonical_key(ds.seed));
  j["entries"] = json::array();
  for (const auto& [key, cut] : ds.cuts) {
    json e;
    e["file"] = cut_file_name(key);
    e["depth"] = cut.witness.size();
    e["witness"] = cut.witness.str();
    j["entries"].push_back(e);
  }
  return j;
}

void export_diagram(const DiagramSet& ds, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ParseError("cannot create " + dir + ": " + ec.message());
  for (const auto& [key, cut] : ds.cuts) {
    json j;
    j["witness"] = cut.witness.str();
    j["graph"] = graph_to_json(cut.graph);
    write_text(fs::path(dir) / cut_file_name(key), j.dump(2) + "\n");
  }
  write_text(fs::path(dir) / "background.dot", background_to_dot(background(ds)));
  write_text(fs::path(dir) / "index.json", diagram_index(ds).dump(2) + "\n");
}

}  // namespace spacetime
