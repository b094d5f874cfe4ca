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

#ifndef SPACETIME_CORE_TOKEN_HPP_
#define SPACETIME_CORE_TOKEN_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <utility>

namespace spacetime {

// Opaque string token; Tag keeps positions, ports and states apart.
template <class Tag>
class Token {
 public:
  Token() = default;
  explicit Token(std::string v) : value_(std::move(v)) {}
  explicit Token(const char* v) : value_(v) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const Token&, const Token&) = default;
  friend bool operator==(const Token&, const Token&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Token& t) {
    return os << t.value_;
  }

 private:
  std::string value_;
};

using Position = Token<struct PositionTag>;
using Port = Token<struct PortTag>;
using StateToken = Token<struct StateTag>;

using PositionSet = std::set<Position>;
using PortSet = std::set<Port>;

// A named space-time event t.x.
struct Name {
  std::int64_t t = 0;
  Position x;

  Name() = default;
  Name(std::int64_t t_, Position x_) : t(t_), x(std::move(x_)) {}

  Name shifted(std::int64_t dt) const { return Name(t + dt, x); }
  std::string str() const { return std::to_string(t) + "." + x.str(); }

  // Sorted by position first so all vertices at one position are adjacent.
  friend std::strong_ordering operator<=>(const Name& a, const Name& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.t <=> b.t;
  }
  friend bool operator==(const Name&, const Name&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Name& n) {
    return os << n.str();
  }
};

// Parses "t.x"; throws ParseError.
Name parse_name(const std::string& s);

struct Endpoint {
  Name vertex;
  Port port;

  std::string str() const { return vertex.str() + ":" + port.str(); }

  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Edge {
  Endpoint from;
  Endpoint to;

  Edge() = default;
  Edge(Endpoint f, Endpoint t) : from(std::move(f)), to(std::move(t)) {}
  Edge(const Name& u, const std::string& a, const Name& v, const std::string& b)
      : from{u, Port(a)}, to{v, Port(b)} {}

  bool touches(const Name& v) const { return from.vertex == v || to.vertex == v; }
  std::string str() const { return from.str() + " -> " + to.str(); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

}  // namespace spacetime

template <class Tag>
struct std::hash<spacetime::Token<Tag>> {
  std::size_t operator()(const spacetime::Token<Tag>& t) const noexcept {
    return std::hash<std::string>()(t.str());
  }
};

template <>
struct std::hash<spacetime::Name> {
  std::size_t operator()(const spacetime::Name& n) const noexcept {
    return std::hash<std::string>()(n.x.str()) * 31 + std::hash<std::int64_t>()(n.t);
  }
};

#endif  // SPACETIME_CORE_TOKEN_HPP_
