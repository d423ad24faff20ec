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

#include "flipiet/gasket.hpp"

#include <algorithm>
#include <map>

namespace flipiet {

SimplexPoint SimplexPoint::make(FieldElement a, FieldElement b, FieldElement c) {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
    throw Error("simplex point needs strictly positive coordinates");
  if (!((a + b + c) == a.spec()->one())) throw Error("simplex coordinates must sum to 1");
  return {std::move(a), std::move(b), std::move(c)};
}

std::optional<SimplexPoint> gasket_step(const SimplexPoint& p) {
  const FieldElement* coords[3] = {&p.x1, &p.x2, &p.x3};
  for (int i = 0; i < 3; ++i) {
    FieldElement rest = *coords[(i + 1) % 3] + *coords[(i + 2) % 3];
    FieldElement diff = *coords[i] - rest;
    if (diff.sign() > 0) {
      // Subtract the two smaller entries from the dominant one, then
      // renormalize by the new sum (= x_i after the subtraction trick).
      FieldElement nx[3];
      nx[i] = diff;
      nx[(i + 1) % 3] = *coords[(i + 1) % 3];
      nx[(i + 2) % 3] = *coords[(i + 2) % 3];
      FieldElement sum = nx[0] + nx[1] + nx[2];
      return SimplexPoint{nx[0] / sum, nx[1] / sum, nx[2] / sum};
    }
  }
  return std::nullopt;
}

GasketDepth gasket_depth(const SimplexPoint& p, long max_iters) {
  SimplexPoint cur = p;
  for (long k = 0; k < max_iters; ++k) {
    // Boundary tie: the dominant coordinate equals the sum of the others, the
    // step would leave the open simplex.
    bool tie = (cur.x1 - cur.x2 - cur.x3).sign() == 0 ||
               (cur.x2 - cur.x1 - cur.x3).sign() == 0 ||
               (cur.x3 - cur.x1 - cur.x2).sign() == 0;
    auto next = gasket_step(cur);
    if (!next) return {k, tie};
    cur = std::move(*next);
  }
  return {max_iters, false};
}

SimplexPoint triangle_gasket_point(const FieldElement& l1, const FieldElement& l2,
                                   const FieldElement& l3) {
  if (!((l1 + l2 + l3) == l1.spec()->one()))
    throw AngleSumNotOne("normalized angles must sum to 1");
  FieldElement one = l1.spec()->one();
  FieldElement x1 = one - l1 - l1, x2 = one - l2 - l2, x3 = one - l3 - l3;
  if (x1.sign() <= 0 || x2.sign() <= 0 || x3.sign() <= 0)
    throw NotAcute("gasket coordinates need an acute triangle");
  return {std::move(x1), std::move(x2), std::move(x3)};
}

namespace {

// The six-interval circle exchange with parameters x1 >= x2 >= x3: pairs of
// equal-length neighbours are swapped, then the circle is rotated by 1/2.
FieldElement ar_map(const std::vector<FieldElement>& x, const FieldElement& y) {
  const auto spec = y.spec();
  FieldElement half = spec->from_rational(make_rational(1, 2));
  FieldElement starts[3] = {spec->zero(), x[0], x[0] + x[1]};
  for (int b = 0; b < 3; ++b) {
    FieldElement h = x[static_cast<size_t>(b)] / Rational(2);
    FieldElement rel = y - starts[b];
    if (rel.sign() >= 0 && (rel - h - h).sign() < 0) {
      FieldElement swapped = (rel - h).sign() < 0 ? y + h : y - h;
      return (swapped + half).mod1();
    }
  }
  throw OutOfDomain("point outside [0, 1)");
}

}  // namespace

ArSquareReport ar_square_report(const FieldElement& l1, const FieldElement& l2,
                                const FieldElement& l3, int sample_points) {
  const auto spec = l1.spec();
  FieldElement half = spec->from_rational(make_rational(1, 2));
  for (const auto& l : {l1, l2, l3})
    if ((l - half).sign() >= 0) throw NotAcute("the square is taken at tau = 1/2, acute shapes");

  CetMap F = triangle_to_cet3(l1, l2, l3, half);
  SquaredIet T = square(F);

  ArSquareReport rep;
  rep.pieces = T.pieces();
  rep.pair_lengths = {half - l1, half - l2, half - l3};
  rep.x = {spec->one() - l1 - l1, spec->one() - l2 - l2, spec->one() - l3 - l3};

  // |I_{i,j}| == |I_{j,i}|: collect total lengths per ordered label pair.
  std::map<std::pair<int, int>, FieldElement> by_pair;
  for (const auto& p : rep.pieces) {
    auto key = std::make_pair(p.i, p.j);
    auto it = by_pair.find(key);
    if (it == by_pair.end())
      by_pair.emplace(key, p.len);
    else
      it->second = it->second + p.len;
  }
  rep.pairs_match = true;
  for (const auto& [key, len] : by_pair) {
    auto rev = by_pair.find({key.second, key.first});
    if (rev == by_pair.end() || !(rev->second == len)) rep.pairs_match = false;
  }

  // Fit the rotation conjugating T to the six-interval normal form taken
  // with the parameters in their natural order, then verify pointwise. The
  // conjugating offset is a singularity of T, so the candidate set is the
  // piece starts.
  rep.pointwise_match = false;
  rep.rotation_offset = spec->zero();
  for (const auto& cand : T.pieces()) {
    FieldElement theta = cand.start;
    bool ok = true;
    for (int s = 0; s < sample_points && ok; ++s) {
      FieldElement y =
          spec->from_rational(make_rational(2 * s + 1, 2 * static_cast<long>(sample_points)));
      FieldElement lhs = T.evaluate((y + theta).mod1());
      FieldElement rhs = (ar_map(rep.x, y) + theta).mod1();
      if (!(lhs == rhs)) ok = false;
    }
    if (ok) {
      rep.pointwise_match = true;
      rep.rotation_offset = theta;
      break;
    }
  }
  return rep;
}

}  // namespace flipiet
