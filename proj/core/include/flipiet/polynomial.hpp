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

#include <utility>
#include <vector>

#include "flipiet/rational.hpp"

namespace flipiet {

// Univariate polynomials, coefficients in ascending degree order.
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rational>;

namespace poly {

ZPoly trim(ZPoly p);
QPoly trim(QPoly p);
int degree(const ZPoly& p);  // -1 for the zero polynomial
int degree(const QPoly& p);

Rational eval(const ZPoly& p, const Rational& x);
Rational eval(const QPoly& p, const Rational& x);
ZPoly derivative(const ZPoly& p);

// Divides by the gcd of the coefficients and makes the leading coefficient
// positive.
ZPoly primitive_part(const ZPoly& p);

QPoly to_q(const ZPoly& p);
// Clears denominators; the result is primitive with positive leading
// coefficient.
ZPoly to_z_primitive(const QPoly& p);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
// Euclidean division, returns {quotient, remainder}.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);  // monic gcd
// Extended gcd: returns {g, u, v} with u*a + v*b = g, g monic (or zero).
struct ExtGcd {
  QPoly g, u, v;
};
ExtGcd ext_gcd(const QPoly& a, const QPoly& b);

// Number of distinct real roots of p in (a, b], via Sturm chains.
int count_roots(const ZPoly& p, const Rational& a, const Rational& b);

}  // namespace poly

}  // namespace flipiet
