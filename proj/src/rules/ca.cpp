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

#include "spacetime/rules/ca.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "spacetime/errors.hpp"
#include "spacetime/rules/lattice.hpp"

namespace spacetime {

void TruthTable::check() const {
  if (alphabet.empty()) throw ParseError("empty CA alphabet");
  std::set<std::string> seen;
  for (const auto& a : alphabet) {
    if (a.empty() || a == kEmptySlot || a.find('|') != std::string::npos ||
        a.find(',') != std::string::npos)
      throw ParseError("bad CA symbol '" + a + "'");
    if (!seen.insert(a).second) throw ParseError("CA symbol '" + a + "' listed twice");
  }
  for (const auto& l : alphabet)
    for (const auto& r : alphabet) {
      auto it = map.find({l, r});
      if (it == map.end()) throw ParseError("truth table misses " + l + "," + r);
      if (!seen.count(it->second)) throw ParseError("truth table maps to unknown '" + it->second + "'");
    }
  if (map.size() != alphabet.size() * alphabet.size())
    throw ParseError("truth table has entries outside the alphabet");
}

const std::string& TruthTable::operator()(const std::string& l, const std::string& r) const {
  auto it = map.find({l, r});
  if (it == map.end()) throw StateTypeMismatch("no table entry for " + l + "," + r);
  return it->second;
}

TruthTable TruthTable::from_json(const nlohmann::ordered_json& j) {
  TruthTable t;
  try {
    for (const auto& a : j.at("alphabet")) t.alphabet.push_back(a.get<std::string>());
    for (const auto& [k, v] : j.at("map").items()) {
      auto comma = k.find(',');
      if (comma == std::string::npos) throw ParseError("bad truth table key '" + k + "'");
      t.map[{k.substr(0, comma), k.substr(comma + 1)}] = v.get<std::string>();
    }
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ParseError(std::string("bad truth table: ") + e.what());
  }
  t.check();
  return t;
}

nlohmann::ordered_json TruthTable::to_json() const {
  nlohmann::ordered_json j;
  j["alphabet"] = alphabet;
  j["map"] = nlohmann::ordered_json::object();
  for (const auto& l : alphabet)
    for (const auto& r : alphabet) j["map"][l + "," + r] = map.at({l, r});
  return j;
}

TruthTable TruthTable::xor_table() {
  TruthTable t;
  t.alphabet = {"0", "1"};
  t.map = {{{"0", "0"}, "0"}, {{"0", "1"}, "1"}, {{"1", "0"}, "1"}, {{"1", "1"}, "0"}};
  return t;
}

TruthTable TruthTable::random_binary(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TruthTable t;
  t.alphabet = {"0", "1"};
  for (const char* l : {"0", "1"})
    for (const char* r : {"0", "1"}) t.map[{l, r}] = (rng() & 1) ? "1" : "0";
  return t;
}

TruthTable TruthTable::corrupted(const std::string& l, const std::string& r) const {
  TruthTable t = *this;
  auto& v = t.map.at({l, r});
  auto it = std::find(alphabet.begin(), alphabet.end(), v);
  v = (std::next(it) == alphabet.end()) ? alphabet.front() : *std::next(it);
  return t;
}

TruthTable read_truth_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return TruthTable::from_json(j);
}

CAState CAState::parse(const StateToken& s) {
  const std::string& v = s.str();
  auto bar = v.find('|');
  if (bar == std::string::npos || v.find('|', bar + 1) != std::string::npos)
    throw StateTypeMismatch("not a CA state: '" + v + "'");
  auto slot = [](std::string p) -> std::optional<std::string> {
    if (p == kEmptySlot) return std::nullopt;
    return p;
  };
  return {slot(v.substr(0, bar)), slot(v.substr(bar + 1))};
}

StateToken CAState::token() const {
  return StateToken(left.value_or(kEmptySlot) + "|" + right.value_or(kEmptySlot));
}

LocalRule make_ca_rule(const TruthTable& table) {
  table.check();
  LocalRule rule;
  rule.name = "ca";
  rule.scheme = distance_one_scheme();
  rule.ports = {lattice::kA, lattice::kA1, lattice::kB, lattice::kB1};
  std::vector<std::optional<std::string>> slots{std::nullopt};
  for (const auto& a : table.alphabet) slots.emplace_back(a);
  for (const auto& l : slots)
    for (const auto& r : slots) rule.alphabet.insert(CAState{l, r}.token());
  rule.ready = [](const Position& x, const PortGraph& local) {
    auto u = local.internal_at(x);
    return u && CAState::parse(local.state(*u)).full();
  };
  rule.rewrite = [table](const Position& x, const PortGraph& local) {
    auto site = lattice::read_site(local, x);
    auto st = CAState::parse(local.state(site.u));
    if (!st.full()) throw IncompleteState(site.u.str() + " holds an empty slot");
    const std::string& r = table(*st.left, *st.right);
    PortGraph out = local;
    if (site.left) {
      auto v = CAState::parse(local.state(*site.left));
      v.right = r;
      out.set_state(*site.left, v.token());
    }
    if (site.right) {
      auto w = CAState::parse(local.state(*site.right));
      w.left = r;
      out.set_state(*site.right, w.token());
    }
    lattice::flip(out, site, CAState{}.token());
    return out;
  };
  return rule;
}

int ca_cells_for_width(int width, bool periodic) {
  return periodic ? width / 2 : width / 2 + 1;
}

PortGraph make_ca_initial(const TruthTable& table, const std::vector<std::string>& config,
                          bool periodic) {
  table.check();
  const int m = static_cast<int>(config.size());
  if (m == 0) throw EmptyConfig("empty CA configuration");
  for (const auto& c : config)
    if (std::find(table.alphabet.begin(), table.alphabet.end(), c) == table.alphabet.end())
      throw StateTypeMismatch("cell value '" + c + "' is not in the alphabet");
  const int n = periodic ? 2 * m : 2 * (m - 1);
  std::vector<StateToken> tokens;
  for (int k = 0; k < n; ++k) {
    if (k % 2 == 0) {
      int j = k / 2;
      tokens.push_back(CAState{config[j], config[(j + 1) % m]}.token());
    } else {
      tokens.push_back(CAState{}.token());
    }
  }
  return lattice::build("f", tokens, periodic ? lattice::Boundary::Ring : lattice::Boundary::Border);
}

}  // namespace spacetime
