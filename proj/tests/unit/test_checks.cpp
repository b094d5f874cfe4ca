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

#include <random>

#include <doctest.h>

#include "spacetime/checks/suite.hpp"
#include "spacetime/errors.hpp"
#include "spacetime/rules/fixtures.hpp"
#include "spacetime/rules/particle.hpp"
#include "spacetime/rules/registry.hpp"

using namespace spacetime;

namespace {

PositionSet ps(std::initializer_list<const char*> xs) {
  PositionSet s;
  for (auto x : xs) s.insert(Position(x));
  return s;
}

bool has_witness(const PropertyReport& r, const char* key, const std::string& value) {
  for (const auto& w : r.witnesses)
    if (w.contains(key) && w[key] == value) return true;
  return false;
}

}  // namespace

TEST_CASE("port order on small sets") {
  PortOrder order({{Port("a"), 2}, {Port("b'"), 2}, {Port("b''"), 1}});
  CHECK(compare_port_sets(order, {Port("b'")}, {Port("b''")}) == std::weak_ordering::greater);
  CHECK(compare_port_sets(order, {}, {}) == std::weak_ordering::equivalent);
  CHECK(compare_port_sets(order, {Port("a")}, {Port("b'")}) == std::weak_ordering::equivalent);
  CHECK(compare_port_sets(order, {}, {Port("a")}) == std::weak_ordering::less);
  CHECK(order.weight(std::vector<Port>{Port("a"), Port("a")}) == 4);
  CHECK_THROWS_AS(order.weight(PortSet{Port("zz")}), UnknownPort);
  CHECK_THROWS_AS(PortOrder({{Port("a"), 0}}), UnknownPort);
  auto unit = PortOrder::unit({Port("a"), Port("b")});
  CHECK(unit.weight(PortSet{Port("a"), Port("b")}) == 2);
}

TEST_CASE("declared orders of the library rules") {
  auto d = PortOrder::for_rule(rule_by_name("dilation"));
  CHECK(d.weights().at(Port("b''")) == 1);
  CHECK(d.weights().at(Port("a")) == 2);
  auto p = PortOrder::for_rule(rule_by_name("particle"));
  for (const auto& [port, w] : p.weights()) CHECK(w == 1);
}

TEST_CASE("report bookkeeping") {
  PropertyReport r("x");
  CHECK(r.passed);
  r.fail(json{{"k", 2}});
  r.fail(json{{"k", 1}});
  r.fail(json{{"k", 2}});
  r.finalize();
  CHECK_FALSE(r.passed);
  REQUIRE(r.witnesses.size() == 2);
  CHECK(r.witnesses[0]["k"] == 1);
  CHECK_FALSE(r.to_json().contains("notes"));
  PropertyReport many("y");
  for (int i = 0; i < 100; ++i) many.fail(json{{"i", i}});
  many.finalize();
  CHECK(many.witnesses.size() == kMaxWitnesses);
  CHECK(many.notes == std::vector<std::string>{"36 further witnesses omitted"});
  PropertyReport a("z"), b("z");
  a.cases = 2;
  b.cases = 3;
  b.fail(json{{"w", 1}});
  a.absorb(b);
  CHECK(a.cases == 5);
  CHECK_FALSE(a.passed);
}

TEST_CASE("the weak/full fixture separates the two notions") {
  auto [g, h] = fixtures::weak_not_full();
  auto full = check_pair_consistency(g, h, false);
  CHECK_FALSE(full.passed);
  REQUIRE(full.witnesses.size() == 1);
  CHECK(full.witnesses[0]["vertex"] == "0.v");
  CHECK(check_pair_consistency(g, h, true).passed);
  CHECK(check_pair_consistency(g, g, false).passed);
}

TEST_CASE("consistency on particle diagrams") {
  auto rule = particle_rule();
  for (bool ring : {false, true}) {
    auto g = make_particle_line(6, {1}, {3}, ring);
    auto ds = enumerate(rule, g, 10);
    CHECK(check_diagram_consistency(ds, false).passed);
    CHECK(check_diagram_consistency(ds, true).passed);
    CHECK(check_past_determines_cut(ds).passed);
    CHECK(check_common_past(ds).passed);
  }
}

TEST_CASE("commutativity, time and ports on one firing") {
  auto rule = particle_rule();
  auto g = make_particle_line(6, {1}, {5}, true);
  auto c = check_commutativity(rule, g);
  CHECK(c.passed);
  CHECK(c.cases == 3);
  CHECK(check_time_increasing(rule, g, Position("x2")).passed);
  auto pd = check_port_decreasing(rule, PortOrder::for_rule(rule), g, Position("x2"));
  CHECK(pd.passed);
  CHECK(pd.cases > 0);
  // A position that does not fire has nothing to check.
  CHECK(check_port_decreasing(rule, PortOrder::for_rule(rule), g, Position("x1")).cases == 0);
}

TEST_CASE("a rule that moves time backwards is caught") {
  auto rule = particle_rule();
  auto base = rule.rewrite;
  rule.rewrite = [base](const Position& x, const PortGraph& local) {
    auto out = base(x, local);
    auto u = *out.internal_at(x);
    // Rename the new vertex one tick into the past.
    PortGraph back;
    for (const auto& [v, st] : out.internal()) back.add_internal(v == u ? u.shifted(-2) : v, st);
    for (const auto& b : out.border()) back.add_border(b);
    for (auto e : out.edges()) {
      if (e.from.vertex == u) e.from.vertex = u.shifted(-2);
      if (e.to.vertex == u) e.to.vertex = u.shifted(-2);
      back.add_edge(e);
    }
    return back;
  };
  auto g = make_particle_line(4, {}, {}, true);
  auto r = check_time_increasing(rule, g, Position("x0"));
  CHECK_FALSE(r.passed);
  CHECK(has_witness(r, "fired", "x0"));
}

TEST_CASE("counterexamples fail their checks") {
  auto np = counterexample_nonprivate();
  auto priv = check_privacy(np.scheme, np.rule, np.graph, 2);
  CHECK_FALSE(priv.passed);
  for (const auto& w : priv.witnesses) CHECK(w["shared"] == json::array({"w"}));

  auto pd = counterexample_nonportdecreasing();
  auto r = check_port_decreasing(pd.rule, PortOrder::for_rule(pd.rule), pd.graph, Position("u"));
  CHECK_FALSE(r.passed);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0]["vertex"] == "0.v");
  auto h = apply(pd.rule, Position("u"), pd.graph);
  auto c = check_pair_consistency(pd.graph, h, false);
  CHECK_FALSE(c.passed);
  CHECK(c.witnesses[0]["vertex"] == "0.v");
}

TEST_CASE("scheme checks on the particle rule") {
  auto rule = particle_rule();
  auto g = make_particle_line(6, {1}, {}, true);
  CHECK(check_extensivity(rule.scheme, g, ps({"x0"})).passed);
  CHECK(check_extensivity(rule.scheme, g, ps({"x0", "x2"})).passed);
  CHECK(check_monotony(rule.scheme, rule, g, 5).passed);
  CHECK(check_privacy(rule.scheme, rule, g, 5).passed);
}

TEST_CASE("a scheme that grows with the surrounding graph is not extensive") {
  // Everything reachable: adding context changes the answer.
  NeighbourhoodScheme greedy{"greedy", [](const PositionSet& o, const PortGraph& g) {
                               return forward_reach(g, o);
                             }};
  auto g = fixtures::diamond();
  CHECK(check_extensivity(greedy, g, ps({"x0"})).passed);
  NeighbourhoodScheme sized{"sized", [](const PositionSet& o, const PortGraph& g) {
                              // Only its own position in smaller graphs.
                              if (g.internal().size() < 6) return o;
                              return forward_reach(g, o);
                            }};
  CHECK_FALSE(check_extensivity(sized, g, ps({"x0"})).passed);
}

TEST_CASE("sequence states and random sequences") {
  auto rule = particle_rule();
  auto g = make_particle_line(4, {}, {}, true);
  auto st = sequence_states(rule, g, 3);
  REQUIRE_FALSE(st.empty());
  CHECK(st.front().witness.empty());
  for (const auto& s : st) {
    CHECK(s.graph == apply_sequence(rule, s.witness, g));
    CHECK(s.letters == s.witness.letter_set());
  }
  CHECK_THROWS_AS(sequence_states(rule, g, 8, 5), BudgetExceeded);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    auto s = random_valid_sequence(rule, g, 6, rng);
    CHECK(s.size() <= 6);
    CHECK(is_valid(rule, s, g));
  }
}

TEST_CASE("confluence on explicit pairs") {
  auto rule = particle_rule();
  auto g = make_particle_line(6, {1}, {3}, true);
  CHECK(check_confluence(rule, g, Sequence::parse("x2,x0"), Sequence::parse("x4")).passed);
  CHECK(check_confluence(rule, g, Sequence::parse("x1,x2,x0"), Sequence()).passed);
  CHECK_THROWS_AS(check_confluence(rule, g, Sequence::parse("x1"), Sequence()), InvalidSequence);
}

TEST_CASE("locality") {
  auto rule = particle_rule();
  auto g = make_particle_line(6, {1}, {3}, true);
  CHECK(check_locality(rule, g, Sequence::parse("x1,x2,x0")).passed);
  CHECK_THROWS_AS(check_locality(rule, g, Sequence::parse("x1")), InvalidSequence);
}

TEST_CASE("shrink keeps the smallest failing subsequence it finds") {
  auto s = Sequence::from_chars("abcdab");
  auto fails = [](const Sequence& t) { return t.count(Position("c")) > 0; };
  CHECK(shrink(s, fails) == Sequence::from_chars("c"));
  CHECK(shrink(Sequence(), fails).empty());
}

TEST_CASE("property selection") {
  CHECK(parse_properties("all") == property_names());
  CHECK(parse_properties("privacy,consistency") ==
        std::vector<std::string>{"consistency", "privacy"});
  CHECK(parse_properties("privacy,all").size() == property_names().size());
  CHECK_THROWS_AS(parse_properties("nope"), ParseError);
  CHECK_THROWS_AS(parse_properties(""), ParseError);
}

TEST_CASE("the suite passes the particle rule") {
  auto rule = particle_rule();
  SuiteConfig cfg;
  cfg.budget = 8;
  auto reports = run_suite(rule, rule.scheme, PortOrder::for_rule(rule),
                           make_particle_line(6, {1}, {3}, true), property_names(), cfg);
  CHECK(reports.size() == property_names().size());
  for (const auto& r : reports) {
    INFO(r.property);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
  CHECK(all_passed(reports));
  auto j = suite_to_json(reports);
  CHECK(j["passed"] == true);
}
