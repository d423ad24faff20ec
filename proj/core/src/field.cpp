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

#include "flipiet/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace flipiet {

namespace {

constexpr long kInitialBits = 64;
constexpr long kGcdTestBits = 512;
constexpr long kMaxBits = 1L << 22;

// Exact sign of an integer polynomial at a dyadic point.
int sign_at(const ZPoly& p, const Dyadic& x) {
  Dyadic acc = Dyadic::zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Dyadic(*it, 0);
  return acc.sign();
}

DyadicInterval eval_interval(const ZPoly& p, const DyadicInterval& x) {
  DyadicInterval acc = DyadicInterval::point(Dyadic::zero());
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * x + DyadicInterval::point(Dyadic(*it, 0));
  }
  return acc;
}

// Smallest dyadic grid multiple of 2^-k at or below q.
Dyadic dyadic_floor(const Rational& q, long k) {
  Rational scaled = q;
  Int two_k = 1;
  mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(), static_cast<unsigned long>(k));
  scaled *= Rational(two_k);
  return Dyadic(floor_int(scaled), -k);
}

Dyadic dyadic_ceil(const Rational& q, long k) {
  Dyadic f = dyadic_floor(q, k);
  if (f.to_rational() == q) return f;
  return Dyadic(f.m + 1, f.e);
}

}  // namespace

FieldSpec::Ptr FieldSpec::make(ZPoly p_in, Rational lo, Rational hi, std::string id) {
  ZPoly p = poly::primitive_part(p_in);
  int deg = poly::degree(p);
  if (deg < 1) throw Error("field polynomial must be nonconstant");
  if (lo > hi) std::swap(lo, hi);

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->id_ = std::move(id);
  spec->p_ = p;
  spec->degree_ = deg;
  spec->interval_ = {lo, hi};

  QPoly monic = poly::to_q(p);
  Rational lead = monic.back();
  for (auto& c : monic) c /= lead;
  spec->monic_p_ = std::move(monic);

  if (deg == 1) {
    Rational root = make_rational(-p[0], p[1]);
    if (root < lo || root > hi)
      throw NoRootInInterval("degree-1 root " + to_string(root) + " outside interval");
    spec->root_is_rational_ = true;
    spec->rational_root_ = root;
    return spec;
  }

  Rational plo = poly::eval(p, lo), phi = poly::eval(p, hi);
  if (sgn(plo) == 0 || sgn(phi) == 0)
    throw Error("field polynomial vanishes at an isolating-interval endpoint; shrink it");
  if (sgn(plo) == sgn(phi))
    throw NoRootInInterval("no sign change of the polynomial over the isolating interval");
  int roots = poly::count_roots(p, lo, hi);
  if (roots > 1) throw MultipleRootsInInterval("interval brackets more than one real root");
  if (roots < 1) throw NoRootInInterval("interval brackets no real root");
  return spec;
}

FieldSpec::Ptr FieldSpec::rationals() {
  static Ptr q = make({-1, 1}, Rational(1), Rational(1), "q");
  return q;
}

void FieldSpec::refine_locked(long bits) const {
  if (root_is_rational_) return;

  if (cache_bits_ < 0) {
    // Establish a dyadic bracket [A, B] with a sign change that still
    // isolates the root. Bisect the rational interval first so that the
    // outward dyadic rounding cannot capture a second root.
    Rational lo = interval_.first, hi = interval_.second;
    int slo = sgn(poly::eval(p_, lo));
    for (long k = 16;; k *= 2) {
      for (int step = 0; step < 8; ++step) {
        Rational mid = (lo + hi) / 2;
        int sm = sgn(poly::eval(p_, mid));
        if (sm == 0) {
          root_is_rational_ = true;
          rational_root_ = mid;
          return;
        }
        if (sm == slo)
          lo = mid;
        else
          hi = mid;
      }
      Dyadic a = dyadic_floor(lo, k), b = dyadic_ceil(hi, k);
      int sa = sign_at(p_, a), sb = sign_at(p_, b);
      if (sa != 0 && sb != 0 && sa != sb &&
          poly::count_roots(p_, a.to_rational(), b.to_rational()) == 1) {
        cache_ = {a, b};
        cache_bits_ = 0;
        break;
      }
      if (k > kMaxBits) throw RefinementBudgetExceeded("could not establish a dyadic bracket");
    }
  }

  // Bisect, keeping both endpoints on a common power-of-two grid.
  const Dyadic target(Int(1), -bits);
  int sa = sign_at(p_, cache_.lo);
  while (target < cache_.hi - cache_.lo) {
    long e = std::min(cache_.lo.e, cache_.hi.e) - 1;
    Int lm = cache_.lo.m, hm = cache_.hi.m;
    mpz_mul_2exp(lm.get_mpz_t(), lm.get_mpz_t(), static_cast<unsigned long>(cache_.lo.e - e));
    mpz_mul_2exp(hm.get_mpz_t(), hm.get_mpz_t(), static_cast<unsigned long>(cache_.hi.e - e));
    Dyadic mid((lm + hm) / 2, e);
    int sm = sign_at(p_, mid);
    if (sm == 0) {
      root_is_rational_ = true;
      rational_root_ = mid.to_rational();
      return;
    }
    cache_.lo = Dyadic(lm, e);
    cache_.hi = Dyadic(hm, e);
    if (sm == sa)
      cache_.lo = mid;
    else
      cache_.hi = mid;
  }
  cache_bits_ = std::max(cache_bits_, bits);
}

DyadicInterval FieldSpec::root_enclosure(long bits) const {
  std::lock_guard<std::mutex> lock(mu_);
  refine_locked(bits);
  if (root_is_rational_) {
    // Exact rational roots get a degenerate dyadic enclosure only when the
    // root is dyadic; otherwise callers use rational_root() directly.
    Dyadic lo = dyadic_floor(rational_root_, bits);
    Dyadic hi = dyadic_ceil(rational_root_, bits);
    return {lo, hi};
  }
  return cache_;
}

double FieldSpec::root_approx() const {
  if (root_is_rational_) return rational_root_.get_d();
  DyadicInterval e = root_enclosure(kInitialBits);
  Rational mid = e.lo.to_rational() + e.hi.to_rational();
  return mid.get_d() / 2.0;
}

FieldElement FieldSpec::zero() const { return from_rational(Rational(0)); }
FieldElement FieldSpec::one() const { return from_rational(Rational(1)); }

FieldElement FieldSpec::from_rational(const Rational& q) const {
  std::vector<Rational> c(static_cast<size_t>(degree_), Rational(0));
  c[0] = q;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_int(long v) const { return from_rational(Rational(v)); }

FieldElement FieldSpec::generator() const {
  if (degree_ == 1) return from_rational(rational_root_);
  std::vector<Rational> c(static_cast<size_t>(degree_), Rational(0));
  c[1] = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::element(std::vector<Rational> coeffs) const {
  if (static_cast<int>(coeffs.size()) > degree_)
    throw Error("coefficient vector longer than field degree");
  coeffs.resize(static_cast<size_t>(degree_), Rational(0));
  return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement::FieldElement(FieldSpec::Ptr spec, std::vector<Rational> c)
    : spec_(std::move(spec)), c_(std::move(c)) {}

void FieldElement::check_same(const FieldElement& a, const FieldElement& b) {
  if (!a.spec_ || !b.spec_) throw Error("uninitialized field element");
  if (a.spec_.get() != b.spec_.get())
    throw FieldMismatch("elements of different fields: " + a.spec_->id() + " vs " +
                        b.spec_->id());
}

bool FieldElement::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw Error("element is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

int FieldElement::sign() const {
  if (!spec_) throw Error("uninitialized field element");
  if (is_zero()) return 0;
  if (is_rational()) return sgn(c_[0]);
  if (spec_->root_is_rational()) {
    QPoly q(c_.begin(), c_.end());
    return sgn(poly::eval(q, spec_->rational_root()));
  }

  // Clear denominators once; the sign of the integer polynomial at the root
  // is the sign of the element.
  QPoly q(c_.begin(), c_.end());
  ZPoly zq = poly::to_z_primitive(q);
  // to_z_primitive normalizes the leading sign; recover the true scale sign.
  {
    int lead_true = sgn(q[static_cast<size_t>(poly::degree(q))]);
    int lead_z = sgn(zq[static_cast<size_t>(poly::degree(zq))]);
    if (lead_true != lead_z)
      for (auto& c : zq) c = -c;
  }

  bool gcd_tested = false;
  for (long bits = kInitialBits; bits <= kMaxBits; bits *= 2) {
    DyadicInterval enc = spec_->root_enclosure(bits);
    if (spec_->root_is_rational()) return sign();  // discovered during refinement
    DyadicInterval val = eval_interval(zq, enc);
    int s = val.certain_sign();
    if (s != 0) return s;
    if (!gcd_tested && bits >= kGcdTestBits) {
      gcd_tested = true;
      QPoly g = poly::gcd(spec_->monic_modulus(), q);
      if (poly::degree(g) >= 1) {
        ZPoly gz = poly::to_z_primitive(g);
        const auto& iv = spec_->isolating_interval();
        if (poly::count_roots(gz, iv.first, iv.second) >= 1) return 0;
      }
    }
  }
  throw RefinementBudgetExceeded("sign undecided at maximal refinement depth");
}

double FieldElement::to_double() const {
  if (!spec_) return 0.0;
  if (is_rational()) return c_.empty() ? 0.0 : c_[0].get_d();
  // Exact rational evaluation at a refined root approximation; plain double
  // Horner overflows once coefficients outgrow the value.
  QPoly q(c_.begin(), c_.end());
  if (spec_->root_is_rational()) return poly::eval(q, spec_->rational_root()).get_d();
  DyadicInterval enc = spec_->root_enclosure(96);
  Rational mid = (enc.lo.to_rational() + enc.hi.to_rational()) / 2;
  return poly::eval(q, mid).get_d();
}

std::string FieldElement::to_string() const {
  if (spec_ && spec_->degree() == 1) return "rat:" + flipiet::to_string(rational_value());
  std::ostringstream os;
  os << "alg:";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "@" << (spec_ ? spec_->id() : "?");
  return os.str();
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  std::vector<Rational> c(a.c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  return FieldElement(a.spec_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  std::vector<Rational> c(a.c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
  return FieldElement(a.spec_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
  return FieldElement(spec_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  size_t d = a.c_.size();
  std::vector<Rational> conv(2 * d - 1, Rational(0));
  for (size_t i = 0; i < d; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < d; ++j) conv[i + j] += a.c_[i] * b.c_[j];
  }
  // Reduce modulo the monic modulus.
  const QPoly& m = a.spec_->monic_modulus();
  for (size_t i = conv.size(); i-- > d;) {
    Rational f = conv[i];
    if (sgn(f) == 0) continue;
    conv[i] = 0;
    for (size_t j = 0; j < d; ++j) conv[i - d + j] -= f * m[j];
  }
  conv.resize(d);
  return FieldElement(a.spec_, std::move(conv));
}

FieldElement FieldElement::inverse() const {
  if (!spec_) throw Error("uninitialized field element");
  if (is_zero()) throw DivisionByZero("division by zero");
  if (spec_->degree() == 1) {
    return FieldElement(spec_, {Rational(1) / c_[0]});
  }
  QPoly q(c_.begin(), c_.end());
  q = poly::trim(std::move(q));
  auto eg = poly::ext_gcd(q, spec_->monic_modulus());
  if (poly::degree(eg.g) != 0) {
    if (sign() == 0)
      throw DivisionByZero("division by an element that is numerically zero");
    throw DivisionByZeroDivisor("element is a zero divisor modulo a reducible modulus");
  }
  std::vector<Rational> c(eg.u.begin(), eg.u.end());
  c.resize(c_.size(), Rational(0));
  return FieldElement(spec_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  return a.c_ == b.c_;
}

FieldElement FieldElement::operator+(const Rational& q) const {
  std::vector<Rational> c = c_;
  c[0] += q;
  return FieldElement(spec_, std::move(c));
}
FieldElement FieldElement::operator-(const Rational& q) const { return *this + (-q); }
FieldElement FieldElement::operator*(const Rational& q) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= q;
  return FieldElement(spec_, std::move(c));
}
FieldElement FieldElement::operator/(const Rational& q) const {
  if (sgn(q) == 0) throw DivisionByZero("division by zero rational");
  return *this * (Rational(1) / q);
}

Int FieldElement::floor() const {
  if (is_rational()) return floor_int(rational_value());
  double approx = to_double();
  Int k0(static_cast<long>(std::floor(approx)));
  for (long d = -2; d <= 2; ++d) {
    Int k = k0 + d;
    FieldElement lo = *this - Rational(k);
    FieldElement hi = lo - Rational(1);
    if (lo.sign() >= 0 && hi.sign() < 0) return k;
  }
  throw Error("floor: approximation too far off");
}

FieldElement FieldElement::mod1() const {
  Int k = floor();
  return *this - Rational(k);
}

FieldRegistry FieldRegistry::with_builtins() {
  // Process-wide spec instances: elements interoperate exactly when they
  // share the FieldSpec object, so the builtins must not be duplicated.
  static const FieldSpec::Ptr trib =
      FieldSpec::make({-1, 1, 1, 1}, make_rational(1, 2), make_rational(3, 5), "trib");
  static const FieldSpec::Ptr sqrt2 = FieldSpec::make({-2, 0, 1}, Rational(1), Rational(2), "sqrt2");
  static const FieldSpec::Ptr sqrt3 =
      FieldSpec::make({-3, 0, 1}, make_rational(3, 2), Rational(2), "sqrt3");
  static const FieldSpec::Ptr grid24 =
      FieldSpec::make({1, 0, -10, 0, 1}, Rational(3), Rational(4), "grid24");
  FieldRegistry r;
  r.add(FieldSpec::rationals());
  r.add(trib);
  r.add(sqrt2);
  r.add(sqrt3);
  r.add(grid24);
  return r;
}

void FieldRegistry::add(const FieldSpec::Ptr& spec) { specs_[spec->id()] = spec; }

FieldSpec::Ptr FieldRegistry::get(const std::string& id) const {
  auto it = specs_.find(id);
  if (it == specs_.end()) throw Error("unknown field id: " + id);
  return it->second;
}

bool FieldRegistry::contains(const std::string& id) const { return specs_.count(id) != 0; }

std::vector<std::string> FieldRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, _] : specs_) out.push_back(id);
  return out;
}

FieldElement FieldRegistry::parse_element(const std::string& text) const {
  if (text.rfind("rat:", 0) == 0)
    return FieldSpec::rationals()->from_rational(parse_rational(text.substr(4)));
  if (text.rfind("alg:", 0) == 0) {
    auto at = text.find('@');
    if (at == std::string::npos) throw ParseError("alg element needs @field-id: " + text);
    std::string body = text.substr(4, at - 4);
    std::string id = text.substr(at + 1);
    auto spec = get(id);
    std::vector<Rational> coeffs;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) coeffs.push_back(parse_rational(tok));
    return spec->element(std::move(coeffs));
  }
  // Bare rationals are accepted as a convenience.
  return FieldSpec::rationals()->from_rational(parse_rational(text));
}

}  // namespace flipiet
