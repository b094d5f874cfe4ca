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

#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "spacetime/diagrams/export.hpp"
#include "spacetime/errors.hpp"
#include "spacetime/rules/dilation.hpp"
#include "spacetime/rules/particle.hpp"

using namespace spacetime;

namespace {

// Every valid sequence up to the budget, depth first, collected by graph.
// Slow and independent of enumerate's deduplicated breadth-first search.
void all_cuts(const LocalRule& rule, const PortGraph& g, int budget, std::set<std::string>& out) {
  out.insert(canonical_key(g));
  if (budget == 0) return;
  for (const auto& x : enabled(rule, g)) all_cuts(rule, apply(rule, x, g), budget - 1, out);
}

std::set<std::string> keys(const DiagramSet& ds) {
  std::set<std::string> k;
  for (const auto& [key, cut] : ds.cuts) k.insert(key);
  return k;
}

}  // namespace

TEST_CASE("enumerate agrees with exhaustive sequence search") {
  auto rule = particle_rule();
  struct Case {
    PortGraph g;
    int budget;
  };
  std::vector<Case> cases{{make_particle_line(4, {1}, {}, true), 6},
                          {make_particle_line(6, {1}, {3}, true), 5},
                          {make_particle_line(7, {1}, {5}, false), 8},
                          {make_particle_line(5, {}, {3}, false, lattice::Boundary::Reflect), 6}};
  for (const auto& c : cases) {
    std::set<std::string> want;
    all_cuts(rule, c.g, c.budget, want);
    auto ds = enumerate(rule, c.g, c.budget);
    CHECK(keys(ds) == want);
  }
}

TEST_CASE("frozen diagram sizes") {
  auto rule = particle_rule();
  // Values from the exhaustive search above, recorded once.
  CHECK(enumerate(rule, make_particle_line(9, {1}, {7}, false), 12).size() == 14);
  CHECK(enumerate(rule, make_particle_line(4, {}, {}, true), 12).size() == 19);
  CHECK(enumerate(rule, make_particle_line(6, {}, {}, true), 12).size() == 41);
  CHECK(enumerate(rule, make_particle_line(8, {}, {}, true), 12).size() == 98);
}

TEST_CASE("witnesses are shortest and lexicographically least") {
  auto rule = particle_rule();
  auto g = make_particle_line(6, {1}, {}, true);
  auto ds = enumerate(rule, g, 6);
  for (const auto& [key, cut] : ds.cuts) {
    CHECK(is_valid(rule, cut.witness, g));
    CHECK(canonical_key(apply_sequence(rule, cut.witness, g)) == key);
  }
  // Both orders of two independent firings reach one cut; the smaller wins.
  auto both = apply_sequence(rule, Sequence::parse("x2,x0"), g);
  REQUIRE(ds.contains(both));
  CHECK(ds.cuts.at(canonical_key(both)).witness == Sequence::parse("x0,x2"));
}

TEST_CASE("budget zero and the cut cap") {
  auto rule = particle_rule();
  auto g = make_particle_line(6, {}, {}, true);
  auto ds = enumerate(rule, g, 0);
  CHECK(ds.size() == 1);
  CHECK(ds.cuts.begin()->second.witness.empty());
  EnumerateOptions opts;
  opts.max_cuts = 5;
  CHECK_THROWS_AS(enumerate(rule, g, 12, opts), BudgetExceeded);
}

TEST_CASE("worker count does not change the diagram") {
  auto rule = particle_rule();
  auto g = make_particle_line(8, {1}, {5}, true);
  EnumerateOptions one, many;
  many.jobs = 4;
  auto a = enumerate(rule, g, 10, one);
  auto b = enumerate(rule, g, 10, many);
  CHECK(diagram_index(a).dump() == diagram_index(b).dump());
}

TEST_CASE("background collects every vertex, arc and state") {
  auto rule = particle_rule();
  auto g = make_particle_line(4, {1}, {}, true);
  auto ds = enumerate(rule, g, 2);
  auto bg = background(ds);
  for (const auto& [key, cut] : ds.cuts) {
    for (const auto& v : cut.graph.vertices()) CHECK(bg.vertices.count(v));
    for (const auto& e : cut.graph.edges()) CHECK(bg.arcs.count(e));
    for (const auto& [v, s] : cut.graph.internal()) CHECK(bg.state_history.at(v).count(s));
  }
  // x1 loses its mover to x2, so it shows two states.
  CHECK(bg.state_history.at(Name(0, Position("x1"))) ==
        std::set<StateToken>{StateToken("00"), StateToken("01")});
  auto dot = background_to_dot(bg);
  CHECK(dot.find("{00,01}") != std::string::npos);
}

TEST_CASE("round-robin visits each column once per sweep") {
  auto rule = particle_rule();
  for (int n : {4, 6, 8}) {
    auto g = make_particle_line(n, {}, {}, true);
    auto [cut, seq] = max_schedule(rule, g, n, "round-robin");
    CHECK(seq.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      CHECK(count_retirements(seq, Position(lattice::column_token("x", k))) == 1);
    CHECK(cut == apply_sequence(rule, seq, g));
  }
  auto [c0, s0] = max_schedule(rule, make_particle_line(4, {}, {}, true), 0, "round-robin");
  CHECK(s0.empty());
}

TEST_CASE("schedule policies") {
  auto rule = particle_rule();
  auto g = make_particle_line(6, {1}, {}, true);
  auto a = max_schedule(rule, g, 30, "random:3");
  auto b = max_schedule(rule, g, 30, "random:3");
  CHECK(a.second == b.second);
  CHECK(is_valid(rule, a.second, g));
  CHECK_THROWS_AS(max_schedule(rule, g, 3, "fifo"), ParseError);
  CHECK_THROWS_AS(max_schedule(rule, g, 3, "random:x"), ParseError);
  // Three columns with borders never fire.
  CHECK_THROWS_AS(max_schedule(rule, make_particle_line(3, {}, {}, false), 1, "round-robin"),
                  Starved);
}

TEST_CASE("DOT output") {
  auto g = make_particle_line(3, {1}, {}, false);
  auto dot = to_dot(g, "seed");
  CHECK(dot.rfind("digraph \"seed\" {", 0) == 0);
  CHECK(dot.find("\"0.L\" [shape=ellipse, style=dashed") != std::string::npos);
  CHECK(dot.find("\"0.x1\" [shape=ellipse, style=solid, label=\"0.x1\\n01\"]") !=
        std::string::npos);
  CHECK(dot.find("[label=\"a→a'\"]") != std::string::npos);
}

TEST_CASE("export writes one file per cut plus index and background") {
  namespace fs = std::filesystem;
  auto rule = particle_rule();
  auto ds = enumerate(rule, make_particle_line(6, {1}, {}, true), 3);
  fs::path dir = fs::temp_directory_path() / "spacetime_export_test";
  fs::remove_all(dir);
  export_diagram(ds, dir.string());
  std::size_t cut_files = 0;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().filename().string().rfind("cut_", 0) == 0) ++cut_files;
  CHECK(cut_files == ds.size());
  CHECK(fs::exists(dir / "background.dot"));
  std::ifstream in(dir / "index.json");
  auto idx = json::parse(in);
  CHECK(idx["cuts"] == ds.size());
  CHECK(idx["entries"].size() == ds.size());
  for (const auto& [key, cut] : ds.cuts) {
    std::ifstream f(dir / cut_file_name(key));
    auto j = json::parse(f);
    CHECK(graph_from_json(j["graph"]) == cut.graph);
    CHECK(j["witness"] == cut.witness.str());
  }
  fs::remove_all(dir);
  CHECK(cut_file_name("") == "cut_cbf29ce484222325.json");
}
