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

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "spacetime/checks/suite.hpp"
#include "spacetime/oracle/ca_oracle.hpp"
#include "spacetime/rules/dilation.hpp"
#include "spacetime/rules/fixtures.hpp"
#include "spacetime/rules/particle.hpp"
#include "spacetime/rules/registry.hpp"

using namespace spacetime;

namespace {

// Collects reasons for failure; a criterion passes when none were recorded.
struct Outcome {
  std::vector<std::string> problems;
  std::string summary;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

struct Instance {
  std::string label;
  LocalRule rule;
  PortGraph seed;
};

Name at(std::int64_t t, int k) { return Name(t, Position(lattice::column_token("x", k))); }

std::vector<Instance> library_instances(int max_width) {
  std::vector<Instance> out;
  auto x = TruthTable::xor_table();
  for (int n = 4; n <= max_width; n += 2) {
    out.push_back({"particle ring " + std::to_string(n), particle_rule(),
                   make_particle_line(n, {1}, {n - 1}, true)});
    out.push_back({"particle line " + std::to_string(n), particle_rule(),
                   make_particle_line(n, {1}, {n - 1}, false)});
    out.push_back({"particle free line " + std::to_string(n), particle_rule(),
                   make_particle_line(n, {1}, {n - 1}, false, lattice::Boundary::Reflect)});
    std::vector<std::string> ring_cfg, line_cfg;
    for (int k = 0; k < n / 2; ++k) ring_cfg.push_back(k % 3 == 0 ? "1" : "0");
    for (int k = 0; k < n / 2 + 1; ++k) line_cfg.push_back(k % 2 == 0 ? "1" : "0");
    out.push_back({"ca ring " + std::to_string(n), make_ca_rule(x), make_ca_initial(x, ring_cfg, true)});
    out.push_back({"ca line " + std::to_string(n), make_ca_rule(x), make_ca_initial(x, line_cfg, false)});
    int c = (n / 2) - (n / 2) % 2;
    out.push_back({"dilation line " + std::to_string(n), dilation_rule(),
                   make_dilation_line(n, c, {1}, {n - 1})});
  }
  return out;
}

// ---- AC1 ------------------------------------------------------------------

void ac1(Outcome& o) {
  auto base = [] {
    PortGraph g;
    g.add_internal(at(0, 0), StateToken("00")).add_internal(at(0, 1), StateToken("00"));
    g.add_edge(Edge(at(0, 0), "a", at(0, 1), "a'"));
    return g;
  };
  std::vector<std::pair<const char*, PortGraph>> bad;
  {
    auto g = base();
    g.add_border(at(0, 0));
    bad.emplace_back(invariant::kPartitioning, g);
  }
  {
    auto g = base();
    g.add_internal(at(3, 1), StateToken("00"));
    bad.emplace_back(invariant::kUnicity, g);
  }
  {
    auto g = base();
    g.add_internal(at(0, 2), StateToken("00"));
    g.add_edge(Edge(at(0, 0), "a", at(0, 2), "b'"));
    bad.emplace_back(invariant::kNonSaturation, g);
  }
  {
    PortGraph g;
    g.add_border(at(0, 0)).add_border(at(0, 1));
    g.add_edge(Edge(at(0, 0), "a", at(0, 1), "a'"));
    bad.emplace_back(invariant::kNoBorderEdges, g);
  }
  {
    auto g = base();
    g.add_border(at(0, 5));
    bad.emplace_back(invariant::kBorderAttachment, g);
  }
  {
    auto g = base();
    g.add_edge(Edge(at(0, 1), "b", at(0, 0), "b'"));
    bad.emplace_back(invariant::kAcyclicity, g);
  }
  {
    auto g = base();
    g.add_edge(Edge(at(0, 1), "b", at(0, 9), "b'"));
    bad.emplace_back(invariant::kEndpoints, g);
  }
  for (const auto& [inv, g] : bad) {
    auto r = validate(g);
    o.expect(!r.ok && r.has(inv), std::string("not rejected: ") + inv);
  }
  o.expect(validate(base()).ok, "base graph rejected");

  int built = 0;
  auto accept = [&](const std::string& what, const PortGraph& g) {
    ++built;
    o.expect(validate(g).ok, "builder output rejected: " + what);
  };
  auto x = TruthTable::xor_table();
  for (int n = 3; n <= 9; ++n) {
    std::set<int> odd;
    for (int k = 1; k < n; k += 2) odd.insert(k);
    std::set<int> odd_inner = odd;
    odd_inner.erase(n - 1);
    int c = (n / 2) - (n / 2) % 2;
    accept("particle line", make_particle_line(n, odd, odd, false));
    accept("particle free line", make_particle_line(n, odd_inner, odd, false, lattice::Boundary::Reflect));
    accept("dilation line", make_dilation_line(n, c, odd_inner, odd));
    accept("dilation line, no colour", make_dilation_line(n, std::nullopt, odd_inner, odd));
    if (n % 2 == 0) {
      accept("particle ring", make_particle_line(n, odd, odd, true));
      accept("dilation ring", make_dilation_line(n, c, odd, odd, kGreen, true));
      std::vector<std::string> cells(static_cast<std::size_t>(n / 2), "1");
      accept("ca ring", make_ca_initial(x, cells, true));
      cells.push_back("0");
      accept("ca line", make_ca_initial(x, cells, false));
    }
  }
  o.summary = std::to_string(bad.size()) + " violations rejected, " + std::to_string(built) +
              " builder outputs accepted";
}

// ---- AC2 ------------------------------------------------------------------

void ac2(Outcome& o) {
  auto r = subtract(Sequence::from_chars("22159892"), Sequence::from_chars("28542"));
  std::string s;
  for (const auto& p : r.letters) s += p.str();
  o.expect(s == "2199", "got " + s);
  o.summary = "22159892 \\ 28542 = " + s;
}

// ---- AC3 ------------------------------------------------------------------

void ac3(Outcome& o) {
  std::uint64_t cases = 0;
  std::size_t cuts = 0;
  for (const auto& in : library_instances(6)) {
    auto ds = enumerate(in.rule, in.seed, 10);
    cuts += ds.size();
    auto r = check_diagram_consistency(ds, false);
    cases += r.cases;
    o.expect(r.passed, in.label + ": " + std::to_string(r.witnesses.size()) + " violations");
  }
  o.summary = std::to_string(cuts) + " cuts, " + std::to_string(cases) + " observations";
}

// ---- AC4 ------------------------------------------------------------------

bool port_order_laws(int triples) {
  std::vector<Port> universe{Port("a"), Port("a'"), Port("b"), Port("b'"), Port("b''")};
  std::mt19937_64 rng(4);
  for (int i = 0; i < triples; ++i) {
    std::map<Port, int> w;
    for (const auto& p : universe) w[p] = 1 + static_cast<int>(rng() % 3);
    PortOrder order(w);
    PortSet s[3];
    for (auto& set : s)
      for (const auto& p : universe)
        if (rng() & 1) set.insert(p);
    auto ab = compare_port_sets(order, s[0], s[1]);
    auto ba = compare_port_sets(order, s[1], s[0]);
    auto bc = compare_port_sets(order, s[1], s[2]);
    auto ac = compare_port_sets(order, s[0], s[2]);
    if (compare_port_sets(order, s[0], s[0]) != std::weak_ordering::equivalent) return false;
    if ((ab == std::weak_ordering::less) != (ba == std::weak_ordering::greater)) return false;
    if (ab != std::weak_ordering::greater && bc != std::weak_ordering::greater &&
        ac == std::weak_ordering::greater)
      return false;
    PortSet u = s[0];
    u.insert(s[2].begin(), s[2].end());
    if (u.size() > s[0].size() && compare_port_sets(order, u, s[0]) != std::weak_ordering::greater)
      return false;
  }
  return true;
}

void ac4(Outcome& o) {
  const std::vector<std::string> props{"commutativity", "time-increasing", "port-decreasing",
                                       "locality",      "extensivity",     "monotony",
                                       "privacy"};
  SuiteConfig cfg;
  cfg.budget = 12;
  cfg.sequence_budget = 8;
  std::uint64_t cases = 0;
  int runs = 0;
  // Small instances can leave a property vacuous; each rule must exercise
  // every property somewhere.
  std::map<std::pair<std::string, std::string>, std::uint64_t> per_rule;
  for (const auto& in : library_instances(8)) {
    auto reports = run_suite(in.rule, in.rule.scheme, PortOrder::for_rule(in.rule), in.seed, props, cfg);
    ++runs;
    for (const auto& r : reports) {
      cases += r.cases;
      per_rule[{in.rule.name, r.property}] += r.cases;
      o.expect(r.passed, in.label + ": " + r.property);
    }
  }
  for (const auto& [key, n] : per_rule)
    o.expect(n > 0, key.first + ": " + key.second + " checked nothing");
  o.expect(port_order_laws(1000), "port order laws");
  o.summary = std::to_string(runs) + " instances, " + std::to_string(cases) +
              " cases, 1000 port-order triples";
}

// ---- AC5 ------------------------------------------------------------------

void ac5(Outcome& o) {
  auto np = counterexample_nonprivate();
  auto priv = check_privacy(np.scheme, np.rule, np.graph, 4);
  o.expect(!priv.passed, "cex-nonprivate passes privacy");
  for (const auto& w : priv.witnesses)
    o.expect(w["shared"] == json::array({"w"}), "privacy witness " + w.dump());
  auto cons = check_diagram_consistency(enumerate(np.rule, np.graph, 4), false);
  o.expect(!cons.passed, "cex-nonprivate is consistent");
  for (const auto& w : cons.witnesses)
    o.expect(w["vertex"] == "0.w", "consistency witness " + w.dump());

  auto pd = counterexample_nonportdecreasing();
  auto port = check_port_decreasing(pd.rule, PortOrder::for_rule(pd.rule), pd.graph, Position("u"));
  o.expect(!port.passed, "cex-nonportdec is port-decreasing");
  for (const auto& w : port.witnesses)
    o.expect(w["vertex"] == "0.v" && w["fired"] == "u", "port witness " + w.dump());
  auto after = apply(pd.rule, Position("u"), pd.graph);
  auto pair = check_pair_consistency(pd.graph, after, false);
  o.expect(!pair.passed && pair.witnesses.size() == 1 && pair.witnesses[0]["vertex"] == "0.v",
           "G vs A_u G: " + pair.to_json().dump());
  o.summary = "privacy and consistency at w; port-decreasing and consistency at v";
}

// ---- AC6 ------------------------------------------------------------------

void ac6(Outcome& o) {
  std::size_t diagrams = 0;
  for (const auto& in : library_instances(8)) {
    auto ds = enumerate(in.rule, in.seed, 10);
    ++diagrams;
    o.expect(check_diagram_consistency(ds, true).passed, in.label + ": weak consistency");
    o.expect(check_past_determines_cut(ds).passed, in.label + ": past-determines-cut");
  }
  auto [g, h] = fixtures::weak_not_full();
  o.expect(check_pair_consistency(g, h, true).passed, "fixture not weakly consistent");
  o.expect(!check_pair_consistency(g, h, false).passed, "fixture fully consistent");
  o.summary = std::to_string(diagrams) + " diagrams; fixture weak but not full";
}

// ---- AC7 ------------------------------------------------------------------

// Synchronous two-mover oracle: even columns fire on even steps, odd on odd
// steps, and a mover enters the column that fires next to it. Returns the
// vertex created when both movers enter the same column.
std::optional<Name> meeting_point(int right, int left, int steps) {
  for (int s = 0; s < steps; ++s) {
    int r = right + 1, l = left - 1;
    if (r % 2 != s % 2 || l % 2 != s % 2) return std::nullopt;
    right = r;
    left = l;
    // Column c has fired on every step s' <= s with s' = c (mod 2).
    if (right == left)
      return Name((s - right % 2) / 2 + 1, Position(lattice::column_token("x", right)));
  }
  return std::nullopt;
}

void ac7(Outcome& o) {
  auto ds = enumerate(particle_rule(), make_particle_line(9, {1}, {7}, false), 20);
  std::set<Name> both;
  for (const auto& [k, cut] : ds.cuts)
    for (const auto& [v, s] : cut.graph.internal())
      if (s == StateToken("11")) both.insert(v);
  auto want = meeting_point(1, 7, 10);
  o.expect(want.has_value(), "oracle found no meeting");
  o.expect(both.size() == 1, std::to_string(both.size()) + " vertices hold both movers");
  if (want && both.size() == 1) o.expect(*both.begin() == *want, "met at " + both.begin()->str());
  o.summary = std::to_string(ds.size()) + " cuts, meeting at " +
              (both.empty() ? std::string("nowhere") : both.begin()->str()) + ", oracle " +
              (want ? want->str() : std::string("none"));
}

// ---- AC8 ------------------------------------------------------------------

void ac8(Outcome& o) {
  auto rule = particle_rule();
  std::size_t cuts = 0, checked = 0;
  for (int n = 3; n <= 9; ++n) {
    std::set<int> odd, odd_inner;
    for (int k = 1; k < n; k += 2) odd.insert(k);
    odd_inner = odd;
    odd_inner.erase(n - 1);
    std::vector<PortGraph> seeds{make_particle_line(n, odd, {}, false),
                                 make_particle_line(n, {}, odd, false),
                                 make_particle_line(n, odd_inner, odd, false, lattice::Boundary::Reflect)};
    if (n % 2 == 0) seeds.push_back(make_particle_line(n, odd, odd, true));
    for (const auto& g : seeds) {
      auto ds = enumerate(rule, g, 10);
      for (const auto& [k, cut] : ds.cuts) {
        ++cuts;
        for (const auto& v : past(cut.graph)) {
          if (!cut.graph.is_internal(v)) continue;
          ++checked;
          o.expect(cut.graph.state(v) == StateToken("00"), v.str() + " in cut " + cut.witness.str());
        }
      }
    }
  }
  o.summary = std::to_string(checked) + " past vertices in " + std::to_string(cuts) + " cuts";
}

// ---- AC9 ------------------------------------------------------------------

void ac9(Outcome& o) {
  std::vector<TruthTable> tables{TruthTable::xor_table()};
  for (std::uint64_t s = 1; s <= 20; ++s) tables.push_back(TruthTable::random_binary(s));
  std::uint64_t cases = 0;
  int min_layers = 1 << 30;
  std::mt19937_64 rng(9);
  for (std::size_t i = 0; i < tables.size(); ++i) {
    std::vector<std::string> cfg;
    for (int k = 0; k < 4; ++k) cfg.push_back(rng() & 1 ? "1" : "0");
    auto ds = enumerate(make_ca_rule(tables[i]), make_ca_initial(tables[i], cfg, true), 12);
    auto r = compare(ds, tables[i], cfg, true);
    int layers = layers_covered(ds, 4, true);
    min_layers = std::min(min_layers, layers);
    cases += r.cases;
    o.expect(r.passed, "table " + std::to_string(i) + ": " + std::to_string(r.witnesses.size()) +
                           " mismatches");
    o.expect(layers >= 3, "table " + std::to_string(i) + " covers " + std::to_string(layers));
  }
  o.summary = "21 tables, " + std::to_string(cases) + " slots, >= " + std::to_string(min_layers) +
              " layers";
}

// ---- AC10 -----------------------------------------------------------------

void ac10(Outcome& o) {
  auto g = make_dilation_line(9, 4, {}, {});
  auto [cut, seq] = max_schedule(dilation_rule(), g, 200, "round-robin");
  long left = static_cast<long>(count_retirements(seq, Position("x3")));
  long right = static_cast<long>(count_retirements(seq, Position("x5")));
  o.expect(right > 0 && std::labs(left - 2 * right) <= 1,
           "x3 " + std::to_string(left) + ", x5 " + std::to_string(right));
  o.summary = "x3 fired " + std::to_string(left) + ", x5 fired " + std::to_string(right);
}

// ---- AC11 -----------------------------------------------------------------

void ac11(Outcome& o) {
  auto x = TruthTable::xor_table();
  std::vector<Instance> ins{
      {"particle", particle_rule(), make_particle_line(8, {1, 3}, {5, 7}, true)},
      {"ca", make_ca_rule(x), make_ca_initial(x, {"1", "0", "1", "1"}, true)},
      {"dilation", dilation_rule(), make_dilation_line(9, 4, {1}, {7})}};
  std::uint64_t pairs = 0;
  for (const auto& in : ins) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
      auto a = random_valid_sequence(in.rule, in.seed, 8, rng);
      auto b = random_valid_sequence(in.rule, in.seed, 8, rng);
      auto r = check_confluence(in.rule, in.seed, a, b);
      ++pairs;
      o.expect(r.passed, in.label + ": " + a.str() + " / " + b.str());
    }
  }
  o.summary = std::to_string(pairs) + " pairs";
}

// ---- AC12 -----------------------------------------------------------------

void ac12(Outcome& o) {
  const std::vector<std::vector<std::string>> commands{
      {"enumerate", "--rule", "particle", "--line", "9", "--right", "1", "--left", "7", "--budget", "12"},
      {"enumerate", "--rule", "ca", "--ring", "8", "--budget", "12"},
      {"enumerate", "--rule", "dilation", "--line", "8", "--right", "1", "--budget", "12"},
      {"check", "--rule", "particle", "--ring", "6", "--right", "1", "--left", "5", "--budget", "10"},
      {"check", "--rule", "ca", "--ring", "6", "--budget", "10"},
      {"check", "--rule", "dilation", "--line", "6", "--right", "1", "--budget", "10"},
      {"check", "--rule", "cex-nonprivate", "--budget", "6"},
      {"check", "--rule", "cex-nonportdec", "--budget", "6"},
      {"ca", "--width", "8", "--periodic", "--budget", "12", "--seed", "2"}};
  for (const auto& cmd : commands) {
    std::string out[2];
    int code[2];
    int jobs[2] = {1, 8};
    for (int i = 0; i < 2; ++i) {
      auto args = cmd;
      args.push_back("--jobs");
      args.push_back(std::to_string(jobs[i]));
      std::ostringstream os, es;
      code[i] = cli::run(args, os, es);
      out[i] = os.str();
    }
    std::string what = cmd[0] + " " + cmd[2];
    o.expect(code[0] == code[1], what + ": exit codes differ");
    o.expect(out[0] == out[1], what + ": output differs");
    o.expect(!out[0].empty(), what + ": no output");
  }
  o.summary = std::to_string(commands.size()) + " commands byte-identical for --jobs 1 and 8";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"AC1 structural invariants", ac1},   {"AC2 sequence subtraction", ac2},
      {"AC3 full consistency", ac3},        {"AC4 hypothesis suite", ac4},
      {"AC5 counterexamples", ac5},         {"AC6 weak consistency and pasts", ac6},
      {"AC7 particle meeting point", ac7},  {"AC8 past-state normal form", ac8},
      {"AC9 CA against oracle", ac9},       {"AC10 time dilation ratio", ac10},
      {"AC11 confluence", ac11},            {"AC12 tooling determinism", ac12}};
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.problems.empty();
    failed += !ok;
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", secs);
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << t << ")";
    if (!o.summary.empty()) std::cout << ": " << o.summary;
    std::cout << "\n";
    for (std::size_t i = 0; i < o.problems.size() && i < 10; ++i)
      std::cout << "    " << o.problems[i] << "\n";
  }
  return failed ? 1 : 0;
}
