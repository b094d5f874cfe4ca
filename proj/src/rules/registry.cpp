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

#include "spacetime/rules/registry.hpp"

#include "spacetime/errors.hpp"
#include "spacetime/rules/dilation.hpp"
#include "spacetime/rules/particle.hpp"

namespace spacetime {

const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names{"particle", "ca", "dilation", "cex-nonprivate",
                                              "cex-nonportdec"};
  return names;
}

LocalRule rule_by_name(const std::string& name, const TruthTable& table) {
  if (name == "particle") return particle_rule();
  if (name == "ca") return make_ca_rule(table);
  if (name == "dilation") return dilation_rule();
  if (auto g = gadget_by_name(name)) return g->rule;
  throw ParseError("unknown rule '" + name + "'");
}

std::optional<Gadget> gadget_by_name(const std::string& name) {
  if (name == "cex-nonprivate") return counterexample_nonprivate();
  if (name == "cex-nonportdec") return counterexample_nonportdecreasing();
  return std::nullopt;
}

}  // namespace spacetime
