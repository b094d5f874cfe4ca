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

#include "spacetime/rewriting/sequence.hpp"

#include <algorithm>

#include "spacetime/errors.hpp"

namespace spacetime {

Sequence Sequence::parse(const std::string& csv) {
  Sequence s;
  if (csv.empty()) return s;
  std::size_t start = 0;
  while (true) {
    auto comma = csv.find(',', start);
    std::string item = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty letter in sequence '" + csv + "'");
    s.letters.emplace_back(item.substr(b, e - b + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return s;
}

Sequence Sequence::from_chars(const std::string& str) {
  Sequence s;
  for (char c : str) s.letters.emplace_back(std::string(1, c));
  return s;
}

std::string Sequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += letters[i].str();
  }
  return out;
}

PositionSet Sequence::letter_set() const {
  return PositionSet(letters.begin(), letters.end());
}

std::size_t Sequence::count(const Position& x) const {
  return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), x));
}

Sequence Sequence::then(const Position& x) const {
  Sequence s;
  s.letters.reserve(letters.size() + 1);
  s.letters.push_back(x);
  s.letters.insert(s.letters.end(), letters.begin(), letters.end());
  return s;
}

Subtraction subtract_detailed(const Sequence& omega, const Sequence& alpha) {
  Subtraction r{omega, {}};
  // alpha = alpha' x: take x (the rightmost letter) first.
  for (auto a = alpha.letters.rbegin(); a != alpha.letters.rend(); ++a) {
    auto& l = r.result.letters;
    auto hit = std::find(l.rbegin(), l.rend(), *a);
    if (hit == l.rend()) {
      r.missing.push_back(*a);
      continue;
    }
    l.erase(std::next(hit).base());
  }
  return r;
}

Sequence subtract(const Sequence& omega, const Sequence& alpha) {
  return subtract_detailed(omega, alpha).result;
}

}  // namespace spacetime
