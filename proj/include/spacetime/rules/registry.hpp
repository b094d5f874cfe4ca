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

#ifndef SPACETIME_RULES_REGISTRY_HPP_
#define SPACETIME_RULES_REGISTRY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "spacetime/rules/ca.hpp"
#include "spacetime/rules/counterexamples.hpp"

namespace spacetime {

// particle, ca, dilation, cex-nonprivate, cex-nonportdec
const std::vector<std::string>& rule_names();

// Throws ParseError on an unknown name. `table` is used by "ca" only.
LocalRule rule_by_name(const std::string& name,
                       const TruthTable& table = TruthTable::xor_table());

// The counterexample rules come with their own seed graph.
std::optional<Gadget> gadget_by_name(const std::string& name);

}  // namespace spacetime

#endif  // SPACETIME_RULES_REGISTRY_HPP_
