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

#include "flipiet/polynomial.hpp"

#include <sstream>

namespace flipiet {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Int floor_int(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

namespace poly {

ZPoly trim(ZPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly trim(QPoly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

int degree(const ZPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
  return d;
}

int degree(const QPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && sgn(p[static_cast<size_t>(d)]) == 0) --d;
  return d;
}

Rational eval(const ZPoly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Rational eval(const QPoly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ZPoly derivative(const ZPoly& p) {
  ZPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return trim(std::move(d));
}

ZPoly primitive_part(const ZPoly& p_in) {
  ZPoly p = trim(p_in);
  if (p.empty()) return p;
  Int g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return p;
  if (sgn(p.back()) < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

QPoly to_q(const ZPoly& p) {
  QPoly q;
  q.reserve(p.size());
  for (const auto& c : p) q.emplace_back(c);
  return q;
}

ZPoly to_z_primitive(const QPoly& p_in) {
  QPoly p = trim(p_in);
  Int den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z;
  z.reserve(p.size());
  for (const auto& c : p) {
    Rational s = c * Rational(den);
    z.push_back(s.get_num());
  }
  return primitive_part(z);
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(std::move(r));
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(std::move(r));
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(std::move(r));
}

QPoly scale(const QPoly& a, const Rational& c) {
  QPoly r = a;
  for (auto& x : r) x *= c;
  return trim(std::move(r));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a_in, const QPoly& b_in) {
  QPoly a = trim(a_in), b = trim(b_in);
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  QPoly q(a.size(), Rational(0));
  while (static_cast<int>(a.size()) >= static_cast<int>(b.size()) && !a.empty()) {
    size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = trim(std::move(a));
  }
  return {trim(std::move(q)), std::move(a)};
}

QPoly gcd(QPoly a, QPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(a, Rational(1) / a.back());
  return a;
}

ExtGcd ext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = trim(a), r1 = trim(b);
  QPoly u0{Rational(1)}, u1{};
  QPoly v0{}, v1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly u2 = sub(u0, mul(q, u1));
    QPoly v2 = sub(v0, mul(q, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!r0.empty()) {
    Rational lead = r0.back();
    r0 = scale(r0, Rational(1) / lead);
    u0 = scale(u0, Rational(1) / lead);
    v0 = scale(v0, Rational(1) / lead);
  }
  return {std::move(r0), std::move(u0), std::move(v0)};
}

namespace {

int sign_variations(const std::vector<QPoly>& chain, const Rational& x) {
  int vars = 0, last = 0;
  for (const auto& f : chain) {
    int s = sgn(eval(f, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++vars;
    last = s;
  }
  return vars;
}

}  // namespace

int count_roots(const ZPoly& p_in, const Rational& a, const Rational& b) {
  ZPoly p = trim(p_in);
  if (degree(p) <= 0) return 0;
  // Sturm chain of the square-free part.
  QPoly pq = to_q(p);
  QPoly sf = divmod(pq, gcd(pq, to_q(derivative(p)))).first;
  std::vector<QPoly> chain;
  chain.push_back(sf);
  QPoly d;
  for (size_t i = 1; i < sf.size(); ++i) d.push_back(sf[i] * Rational(static_cast<long>(i)));
  chain.push_back(trim(std::move(d)));
  while (poly::degree(chain.back()) > 0) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    chain.push_back(scale(r, Rational(-1)));
  }
  int count = sign_variations(chain, a) - sign_variations(chain, b);
  // Sturm counts roots in (a, b]; count the left endpoint separately when the
  // caller passes a closed interval starting at a root.
  return count;
}

}  // namespace poly

}  // namespace flipiet
