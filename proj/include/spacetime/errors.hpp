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

#ifndef SPACETIME_ERRORS_HPP_
#define SPACETIME_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace spacetime {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SPACETIME_ERROR(Name)          \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

SPACETIME_ERROR(IncompatibleJoin);
SPACETIME_ERROR(UnknownVertex);
SPACETIME_ERROR(SchemeContractBroken);
SPACETIME_ERROR(RuleContractBroken);
SPACETIME_ERROR(InvalidSequence);
SPACETIME_ERROR(ShapeMismatch);
SPACETIME_ERROR(IncompleteState);
SPACETIME_ERROR(BadIndex);
SPACETIME_ERROR(StateTypeMismatch);
SPACETIME_ERROR(UnknownPort);
SPACETIME_ERROR(BudgetExceeded);
SPACETIME_ERROR(Starved);
SPACETIME_ERROR(EmptyConfig);
SPACETIME_ERROR(LayoutMismatch);
SPACETIME_ERROR(ParseError);

#undef SPACETIME_ERROR

}  // namespace spacetime

#endif  // SPACETIME_ERRORS_HPP_
