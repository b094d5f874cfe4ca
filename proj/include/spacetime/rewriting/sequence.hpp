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

#ifndef SPACETIME_REWRITING_SEQUENCE_HPP_
#define SPACETIME_REWRITING_SEQUENCE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "spacetime/core/token.hpp"

namespace spacetime {

// letters[0] is applied last: "yx" means y after x.
struct Sequence {
  std::vector<Position> letters;

  Sequence() = default;
  explicit Sequence(std::vector<Position> l) : letters(std::move(l)) {}

  // "x4,x2,x0": comma separated, rightmost applied first. Empty string is the
  // empty sequence. Throws ParseError on empty items.
  static Sequence parse(const std::string& csv);
  // One letter per character, e.g. "22159892".
  static Sequence from_chars(const std::string& s);

  std::string str() const;
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  PositionSet letter_set() const;
  std::size_t count(const Position& x) const;

  // x applied after this sequence.
  Sequence then(const Position& x) const;
  // Letters in application order.
  std::vector<Position> in_order() const {
    return std::vector<Position>(letters.rbegin(), letters.rend());
  }

  friend auto operator<=>(const Sequence&, const Sequence&) = default;
  friend bool operator==(const Sequence&, const Sequence&) = default;
};

struct Subtraction {
  Sequence result;
  // Letters of alpha that had no occurrence left to remove.
  std::vector<Position> missing;
};

// omega minus alpha: removes, for each letter of alpha from the right, the
// rightmost remaining occurrence in omega. An absent letter is skipped and
// reported in `missing`.
Subtraction subtract_detailed(const Sequence& omega, const Sequence& alpha);
Sequence subtract(const Sequence& omega, const Sequence& alpha);

}  // namespace spacetime

#endif  // SPACETIME_REWRITING_SEQUENCE_HPP_
