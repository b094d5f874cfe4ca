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

#include "spacetime/checks/port_order.hpp"

#include "spacetime/errors.hpp"

namespace spacetime {

PortOrder::PortOrder(std::map<Port, int> weights) : weights_(std::move(weights)) {
  for (const auto& [p, w] : weights_)
    if (w <= 0) throw UnknownPort("port " + p.str() + " needs a positive weight");
}

PortOrder PortOrder::unit(const PortSet& ports) {
  std::map<Port, int> w;
  for (const auto& p : ports) w[p] = 1;
  return PortOrder(w);
}

PortOrder PortOrder::for_rule(const LocalRule& rule) {
  std::map<Port, int> w;
  for (const auto& p : rule.ports) w[p] = 1;
  for (const auto& [p, v] : rule.port_weights) w[p] = v;
  return PortOrder(w);
}

namespace {

template <class Ports>
long sum(const std::map<Port, int>& weights, const Ports& ports) {
  long s = 0;
  for (const auto& p : ports) {
    auto it = weights.find(p);
    if (it == weights.end()) throw UnknownPort("port " + p.str() + " has no weight");
    s += it->second;
  }
  return s;
}

}  // namespace

long PortOrder::weight(const PortSet& a) const { return sum(weights_, a); }
long PortOrder::weight(const std::vector<Port>& a) const { return sum(weights_, a); }

std::weak_ordering compare_port_sets(const PortOrder& order, const PortSet& a, const PortSet& b) {
  return order.weight(a) <=> order.weight(b);
}

std::weak_ordering compare_port_multisets(const PortOrder& order, const std::vector<Port>& a,
                                          const std::vector<Port>& b) {
  return order.weight(a) <=> order.weight(b);
}

}  // namespace spacetime
