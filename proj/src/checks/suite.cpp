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

#include "spacetime/checks/suite.hpp"

#include <algorithm>
#include <random>

#include "spacetime/errors.hpp"
#include "spacetime/parallel.hpp"

namespace spacetime {

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{
      "consistency", "weak-consistency", "past-determines-cut", "common-past",
      "commutativity", "time-increasing", "port-decreasing", "locality",
      "extensivity", "monotony", "privacy", "confluence"};
  return names;
}

std::vector<std::string> parse_properties(const std::string& csv) {
  std::vector<std::string> out;
  auto add = [&](const std::string& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  for (const auto& item : Sequence::parse(csv).letters) {
    const std::string& p = item.str();
    if (p == "all") {
      for (const auto& n : property_names()) add(n);
    } else if (std::find(property_names().begin(), property_names().end(), p) != property_names().end()) {
      add(p);
    } else {
      throw ParseError("unknown property '" + p + "'");
    }
  }
  if (out.empty()) throw ParseError("no property selected");
  // Report in canonical order whatever the request order.
  std::vector<std::string> sorted;
  for (const auto& n : property_names())
    if (std::find(out.begin(), out.end(), n) != out.end()) sorted.push_back(n);
  return sorted;
}

namespace {

bool wants(const std::vector<std::string>& props, const char* p) {
  return std::find(props.begin(), props.end(), p) != props.end();
}

// One report per property, merged over cuts in key order.
PropertyReport over_cuts(const char* name, const std::vector<const Cut*>& cuts, int jobs,
                         const std::function<PropertyReport(const Cut&)>& fn) {
  auto parts = parallel_map(cuts.size(), jobs, [&](std::size_t i) {
    PropertyReport r = fn(*cuts[i]);
    for (auto& w : r.witnesses) w["cut"] = sequence_to_json(cuts[i]->witness);
    return r;
  });
  PropertyReport total(name);
  for (const auto& p : parts) total.absorb(p);
  total.finalize();
  return total;
}

}  // namespace

std::vector<PropertyReport> run_suite(const LocalRule& rule, const NeighbourhoodScheme& scheme,
                                      const PortOrder& order, const PortGraph& g,
                                      const std::vector<std::string>& properties,
                                      const SuiteConfig& cfg) {
  EnumerateOptions opts;
  opts.jobs = cfg.jobs;
  return run_suite(rule, scheme, order, enumerate(rule, g, cfg.budget, opts), properties, cfg);
}

std::vector<PropertyReport> run_suite(const LocalRule& rule, const NeighbourhoodScheme& scheme,
                                      const PortOrder& order, const DiagramSet& ds,
                                      const std::vector<std::string>& props,
                                      const SuiteConfig& cfg) {
  const PortGraph& g = ds.seed;
  std::vector<const Cut*> cuts;
  for (const auto& [k, c] : ds.cuts) cuts.push_back(&c);

  std::vector<SequenceState> states;
  if (wants(props, "locality") || wants(props, "extensivity"))
    states = sequence_states(rule, g, cfg.sequence_budget);

  std::vector<PropertyReport> out;
  for (const auto& p : props) {
    if (p == "consistency") {
      out.push_back(check_diagram_consistency(ds, false, cfg.jobs));
    } else if (p == "weak-consistency") {
      out.push_back(check_diagram_consistency(ds, true, cfg.jobs));
    } else if (p == "past-determines-cut") {
      out.push_back(check_past_determines_cut(ds));
    } else if (p == "common-past") {
      out.push_back(check_common_past(ds));
    } else if (p == "commutativity") {
      out.push_back(over_cuts("commutativity", cuts, cfg.jobs,
                              [&](const Cut& c) { return check_commutativity(rule, c.graph); }));
    } else if (p == "time-increasing") {
      out.push_back(over_cuts("time-increasing", cuts, cfg.jobs, [&](const Cut& c) {
        PropertyReport r("time-increasing");
        for (const auto& x : internal_past_positions(c.graph))
          r.absorb(check_time_increasing(rule, c.graph, x));
        return r;
      }));
    } else if (p == "port-decreasing") {
      out.push_back(over_cuts("port-decreasing", cuts, cfg.jobs, [&](const Cut& c) {
        PropertyReport r("port-decreasing");
        for (const auto& x : enabled(rule, c.graph))
          r.absorb(check_port_decreasing(rule, order, c.graph, x));
        return r;
      }));
    } else if (p == "locality") {
      auto parts = parallel_map(states.size(), cfg.jobs, [&](std::size_t i) {
        return check_locality(rule, g, states[i].witness);
      });
      PropertyReport r("locality");
      for (const auto& part : parts) r.absorb(part);
      r.finalize();
      out.push_back(r);
    } else if (p == "extensivity") {
      std::vector<std::pair<const PortGraph*, PositionSet>> cases;
      std::set<PositionSet> letter_sets;
      for (const auto& s : states)
        if (!s.letters.empty()) letter_sets.insert(s.letters);
      for (const auto& s : letter_sets) cases.emplace_back(&g, s);
      for (const Cut* c : cuts) {
        if (static_cast<int>(c->witness.size()) > cfg.sequence_budget) continue;
        for (const auto& x : internal_past_positions(c->graph)) cases.emplace_back(&c->graph, PositionSet{x});
      }
      auto parts = parallel_map(cases.size(), cfg.jobs, [&](std::size_t i) {
        return check_extensivity(scheme, *cases[i].first, cases[i].second, cfg.extensivity);
      });
      PropertyReport r("extensivity");
      for (const auto& part : parts) r.absorb(part);
      r.finalize();
      out.push_back(r);
    } else if (p == "monotony") {
      out.push_back(check_monotony(scheme, rule, g, cfg.sequence_budget));
    } else if (p == "privacy") {
      out.push_back(check_privacy(scheme, rule, g, cfg.sequence_budget));
    } else if (p == "confluence") {
      std::mt19937_64 rng(cfg.seed);
      std::vector<std::pair<Sequence, Sequence>> pairs;
      for (int i = 0; i < cfg.confluence_trials; ++i) {
        Sequence a = random_valid_sequence(rule, g, cfg.confluence_max_len, rng);
        Sequence b = random_valid_sequence(rule, g, cfg.confluence_max_len, rng);
        pairs.emplace_back(std::move(a), std::move(b));
      }
      auto parts = parallel_map(pairs.size(), cfg.jobs, [&](std::size_t i) {
        return check_confluence(rule, g, pairs[i].first, pairs[i].second);
      });
      PropertyReport r("confluence");
      r.note("seed " + std::to_string(cfg.seed) + ", " + std::to_string(cfg.confluence_trials) +
             " pairs of length <= " + std::to_string(cfg.confluence_max_len));
      for (const auto& part : parts) r.absorb(part);
      r.finalize();
      out.push_back(r);
    } else {
      throw ParseError("unknown property '" + p + "'");
    }
  }
  return out;
}

json suite_to_json(const std::vector<PropertyReport>& reports) {
  json j;
  j["passed"] = all_passed(reports);
  j["reports"] = json::array();
  for (const auto& r : reports) j["reports"].push_back(r.to_json());
  return j;
}

bool all_passed(const std::vector<PropertyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const PropertyReport& r) { return r.passed; });
}

}  // namespace spacetime
