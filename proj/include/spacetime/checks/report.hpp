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

#ifndef SPACETIME_CHECKS_REPORT_HPP_
#define SPACETIME_CHECKS_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "spacetime/core/graph_io.hpp"
#include "spacetime/rewriting/sequence.hpp"

namespace spacetime {

struct PropertyReport {
  std::string property;
  bool passed = true;
  std::uint64_t cases = 0;
  std::vector<json> witnesses;
  std::vector<std::string> notes;

  explicit PropertyReport(std::string p = "") : property(std::move(p)) {}

  void fail(json w) {
    passed = false;
    witnesses.push_back(std::move(w));
  }
  void note(const std::string& n);
  // Adds cases, witnesses and notes of another report on the same property.
  void absorb(const PropertyReport& other);
  // Sorts witnesses by their serialization and drops duplicates.
  void finalize();

  json to_json() const;
};

// Witnesses kept in a report after finalize().
inline constexpr std::size_t kMaxWitnesses = 64;

json sequence_to_json(const Sequence& s);
json positions_to_json(const PositionSet& s);
json ports_to_json(const PortSet& s);

}  // namespace spacetime

#endif  // SPACETIME_CHECKS_REPORT_HPP_
