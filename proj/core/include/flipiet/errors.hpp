// Copyright 2026 The flipiet authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace flipiet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

// numeric
struct NoRootInInterval : Error {
  using Error::Error;
};
struct MultipleRootsInInterval : Error {
  using Error::Error;
};
struct FieldMismatch : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
// Division by a nonzero element that is not invertible modulo a reducible
// modulus polynomial.
struct DivisionByZeroDivisor : Error {
  using Error::Error;
};
struct RefinementBudgetExceeded : Error {
  using Error::Error;
};

// iet_core
struct NonPositiveLength : Error {
  using Error::Error;
};
struct AlphabetMismatch : Error {
  using Error::Error;
};
struct AllFlipsTrivial : Error {
  using Error::Error;
};
struct AngleSumNotOne : Error {
  using Error::Error;
};
struct CombinatoricsMismatch : Error {
  using Error::Error;
};
struct NotFullyFlipped : Error {
  using Error::Error;
};
struct OutOfDomain : Error {
  using Error::Error;
};

// graphs / billiards / gasket
struct ComponentSizeBudgetExceeded : Error {
  using Error::Error;
};
struct RecursionBudgetExceeded : Error {
  using Error::Error;
};
struct VertexHit : Error {
  using Error::Error;
};
struct NotAcute : Error {
  using Error::Error;
};

}  // namespace flipiet
