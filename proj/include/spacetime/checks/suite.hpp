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

#ifndef SPACETIME_CHECKS_SUITE_HPP_
#define SPACETIME_CHECKS_SUITE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "spacetime/checks/checks.hpp"

namespace spacetime {

struct SuiteConfig {
  int budget = 10;            // diagram depth for cut-wise checks
  int sequence_budget = 6;    // valid-sequence length for monotony, privacy, locality
  int confluence_trials = 100;
  int confluence_max_len = 6;
  std::uint64_t seed = 0;
  int jobs = 1;
  ExtensivityOptions extensivity;
};

// Every property the suite knows, in report order.
const std::vector<std::string>& property_names();

// Expands "all" and comma lists; throws ParseError on an unknown name.
std::vector<std::string> parse_properties(const std::string& csv);

// Runs the named checks of `rule` from seed g. The scheme is used for
// extensivity, monotony and privacy; the rule's own scheme for the rest.
std::vector<PropertyReport> run_suite(const LocalRule& rule, const NeighbourhoodScheme& scheme,
                                      const PortOrder& order, const PortGraph& g,
                                      const std::vector<std::string>& properties,
                                      const SuiteConfig& cfg);

// Same, reusing an already enumerated diagram for the cut-wise checks.
std::vector<PropertyReport> run_suite(const LocalRule& rule, const NeighbourhoodScheme& scheme,
                                      const PortOrder& order, const DiagramSet& ds,
                                      const std::vector<std::string>& properties,
                                      const SuiteConfig& cfg);

json suite_to_json(const std::vector<PropertyReport>& reports);
bool all_passed(const std::vector<PropertyReport>& reports);

}  // namespace spacetime

#endif  // SPACETIME_CHECKS_SUITE_HPP_
