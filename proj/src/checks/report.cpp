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

#include "spacetime/checks/report.hpp"

#include <algorithm>

namespace spacetime {

void PropertyReport::note(const std::string& n) {
  if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
}

void PropertyReport::absorb(const PropertyReport& other) {
  cases += other.cases;
  if (!other.passed) passed = false;
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
  for (const auto& n : other.notes) note(n);
}

void PropertyReport::finalize() {
  std::vector<std::pair<std::string, json>> keyed;
  keyed.reserve(witnesses.size());
  for (auto& w : witnesses) keyed.emplace_back(w.dump(), std::move(w));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  witnesses.clear();
  std::size_t total = keyed.size();
  for (std::size_t i = 0; i < keyed.size() && i < kMaxWitnesses; ++i)
    witnesses.push_back(std::move(keyed[i].second));
  if (total > kMaxWitnesses)
    note(std::to_string(total - kMaxWitnesses) + " further witnesses omitted");
  passed = witnesses.empty();
}

json PropertyReport::to_json() const {
  json j;
  j["property"] = property;
  j["passed"] = passed;
  j["cases"] = cases;
  j["witnesses"] = witnesses;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

json sequence_to_json(const Sequence& s) { return s.str(); }

json positions_to_json(const PositionSet& s) {
  json j = json::array();
  for (const auto& p : s) j.push_back(p.str());
  return j;
}

json ports_to_json(const PortSet& s) {
  json j = json::array();
  for (const auto& p : s) j.push_back(p.str());
  return j;
}

}  // namespace spacetime
