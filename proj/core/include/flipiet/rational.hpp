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

#include <string>

#include <gmpxx.h>

#include "flipiet/errors.hpp"

namespace flipiet {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZero("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p" and "p/q", optional sign, base 10.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }

// Largest integer <= q.
Int floor_int(const Rational& q);

}  // namespace flipiet
