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

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "flipiet/dyadic.hpp"
#include "flipiet/polynomial.hpp"

namespace flipiet {

class FieldElement;

// A real number field Q[t]/(p) together with an isolating interval that
// brackets exactly one real root of p. Degree 1 denotes plain Q.
//
// p is not required to be irreducible: arithmetic uses p as the modulus and
// division by a nonzero zero divisor raises DivisionByZeroDivisor.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  using Ptr = std::shared_ptr<const FieldSpec>;

  // Validates that p has exactly one real root in [lo, hi]. For degree >= 2
  // a sign change at the endpoints is required as well.
  static Ptr make(ZPoly p, Rational lo, Rational hi, std::string id = "anon");

  // Q as the degree-1 field t - 1 on [1, 1].
  static Ptr rationals();

  const std::string& id() const { return id_; }
  int degree() const { return degree_; }
  const ZPoly& minimal_polynomial() const { return p_; }
  const std::pair<Rational, Rational>& isolating_interval() const { return interval_; }
  bool root_is_rational() const { return root_is_rational_; }
  const Rational& rational_root() const { return rational_root_; }

  // Monic version of p over Q, used for modular reduction.
  const QPoly& monic_modulus() const { return monic_p_; }

  // An enclosure of the root of width <= 2^-bits. Thread safe; the cached
  // enclosure only ever shrinks.
  DyadicInterval root_enclosure(long bits) const;

  double root_approx() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_int(long v) const;
  // The class of t, i.e. the bracketed root itself.
  FieldElement generator() const;
  FieldElement element(std::vector<Rational> coeffs) const;

 private:
  FieldSpec() = default;

  std::string id_;
  ZPoly p_;
  QPoly monic_p_;
  int degree_ = 0;
  std::pair<Rational, Rational> interval_;
  // Set when the bracketed root turns out to be rational (degree 1, or a
  // reducible modulus whose bracketed root is hit exactly during refinement).
  mutable bool root_is_rational_ = false;
  mutable Rational rational_root_;

  mutable std::mutex mu_;
  mutable DyadicInterval cache_;
  mutable long cache_bits_ = -1;

  void refine_locked(long bits) const;
};

// An element of a FieldSpec, stored as rational coordinates in the power
// basis 1, t, ..., t^(deg-1). Immutable value type.
class FieldElement {
 public:
  FieldElement() = default;  // empty element, unusable until assigned

  const FieldSpec::Ptr& spec() const { return spec_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;  // true when all coords above 1 vanish
  Rational rational_value() const;

  // Exact sign via interval refinement of the root enclosure. Terminates for
  // every element; raises RefinementBudgetExceeded only past a generous bound
  // (which indicates a reducible modulus with an undetected zero divisor or a
  // bug).
  int sign() const;

  double to_double() const;
  std::string to_string() const;  // "rat:p/q" or "alg:c0,c1,...@id"

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  friend bool operator<(const FieldElement& a, const FieldElement& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator<=(const FieldElement& a, const FieldElement& b) {
    return (a - b).sign() <= 0;
  }
  friend bool operator>(const FieldElement& a, const FieldElement& b) { return b < a; }
  friend bool operator>=(const FieldElement& a, const FieldElement& b) { return b <= a; }

  FieldElement operator+(const Rational& q) const;
  FieldElement operator-(const Rational& q) const;
  FieldElement operator*(const Rational& q) const;
  FieldElement operator/(const Rational& q) const;

  // Largest integer <= value, and value mod 1 in [0, 1).
  Int floor() const;
  FieldElement mod1() const;

 private:
  friend class FieldSpec;
  FieldElement(FieldSpec::Ptr spec, std::vector<Rational> c);

  static void check_same(const FieldElement& a, const FieldElement& b);

  FieldSpec::Ptr spec_;
  std::vector<Rational> c_;
};

// Named field specs for parsing "alg:...@id" element strings and the JSON
// field registry {id, poly_coeffs, interval}.
class FieldRegistry {
 public:
  // Registry preloaded with q, trib (t^3+t^2+t-1 on [1/2,3/5]),
  // sqrt2, sqrt3 and grid24 (t^4-10t^2+1 on [3,4], the field of
  // sqrt2 + sqrt3).
  static FieldRegistry with_builtins();

  void add(const FieldSpec::Ptr& spec);
  FieldSpec::Ptr get(const std::string& id) const;
  bool contains(const std::string& id) const;
  std::vector<std::string> ids() const;

  FieldElement parse_element(const std::string& text) const;

 private:
  std::map<std::string, FieldSpec::Ptr> specs_;
};

}  // namespace flipiet
