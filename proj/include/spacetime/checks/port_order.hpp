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

#ifndef SPACETIME_CHECKS_PORT_ORDER_HPP_
#define SPACETIME_CHECKS_PORT_ORDER_HPP_

#include <compare>
#include <map>
#include <vector>

#include "spacetime/rewriting/rule.hpp"

namespace spacetime {

// Sets of ports compared by the sum of positive per-port weights.
class PortOrder {
 public:
  PortOrder() = default;
  // Throws UnknownPort on a non-positive weight.
  explicit PortOrder(std::map<Port, int> weights);

  static PortOrder unit(const PortSet& ports);
  // The rule's declared weights; its other ports weigh 1.
  static PortOrder for_rule(const LocalRule& rule);

  // Throw UnknownPort for an unweighted port.
  long weight(const PortSet& a) const;
  long weight(const std::vector<Port>& multiset) const;

  const std::map<Port, int>& weights() const { return weights_; }

 private:
  std::map<Port, int> weights_;
};

std::weak_ordering compare_port_sets(const PortOrder& order, const PortSet& a, const PortSet& b);
std::weak_ordering compare_port_multisets(const PortOrder& order, const std::vector<Port>& a,
                                          const std::vector<Port>& b);

}  // namespace spacetime

#endif  // SPACETIME_CHECKS_PORT_ORDER_HPP_
