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

#include <algorithm>

#include "flipiet/rational.hpp"

namespace flipiet {

// Exact dyadic number m * 2^e. All arithmetic here is exact; dyadics are
// used as interval endpoints when certifying signs of algebraic numbers.
struct Dyadic {
  Int m{0};
  long e{0};

  Dyadic() = default;
  Dyadic(Int mantissa, long exponent) : m(std::move(mantissa)), e(exponent) {}
  explicit Dyadic(long v) : m(v), e(0) {}

  static Dyadic zero() { return Dyadic(); }

  Rational to_rational() const {
    Int num = m, den = 1;
    if (e >= 0) {
      mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    } else {
      mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-e));
    }
    return make_rational(num, den);
  }

  double to_double() const { return to_rational().get_d(); }

  friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.m, a.e); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    long e = std::min(a.e, b.e);
    Int am = a.m, bm = b.m;
    mpz_mul_2exp(am.get_mpz_t(), am.get_mpz_t(), static_cast<unsigned long>(a.e - e));
    mpz_mul_2exp(bm.get_mpz_t(), bm.get_mpz_t(), static_cast<unsigned long>(b.e - e));
    return Dyadic(am + bm, e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.m * b.m, a.e + b.e);
  }

  int sign() const { return sgn(m); }

  friend bool operator<(const Dyadic& a, const Dyadic& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return (a - b).sign() <= 0; }
};

// Closed interval [lo, hi] with dyadic endpoints.
struct DyadicInterval {
  Dyadic lo, hi;

  static DyadicInterval point(Dyadic d) { return {d, d}; }

  DyadicInterval operator+(const DyadicInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  DyadicInterval operator*(const DyadicInterval& o) const {
    Dyadic c[4] = {lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
    DyadicInterval r{c[0], c[0]};
    for (int i = 1; i < 4; ++i) {
      if (c[i] < r.lo) r.lo = c[i];
      if (r.hi < c[i]) r.hi = c[i];
    }
    return r;
  }

  // +1 / -1 when the whole interval is on one side of zero, 0 when undecided.
  int certain_sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }
};

}  // namespace flipiet
