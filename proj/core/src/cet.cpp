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

#include "flipiet/cet.hpp"

#include <algorithm>
#include <numeric>

namespace flipiet {

CetMap::CetMap(std::vector<FieldElement> lengths, FieldElement tau)
    : lengths_(std::move(lengths)), tau_(std::move(tau)) {
  if (lengths_.empty()) throw Error("CET map needs at least 1 interval");
  spec_ = lengths_[0].spec();
  cum_.reserve(lengths_.size() + 1);
  FieldElement acc = spec_->zero();
  cum_.push_back(acc);
  for (const auto& l : lengths_) {
    if (!l.spec() || l.spec().get() != spec_.get())
      throw FieldMismatch("all lengths must lie in one field");
    if (l.sign() <= 0) throw NonPositiveLength("interval lengths must be positive");
    acc = acc + l;
    cum_.push_back(acc);
  }
  if (!(cum_.back() == spec_->one()))
    throw Error("circle interval lengths must sum to 1 exactly");
  if (tau_.spec().get() != spec_.get()) throw FieldMismatch("tau must lie in the lengths' field");
  if (tau_.sign() < 0 || (tau_ - Rational(1)).sign() >= 0)
    throw Error("tau must lie in [0, 1)");
}

int CetMap::interval_of(const FieldElement& x) const {
  if (x.sign() < 0 || (x - Rational(1)).sign() >= 0) throw OutOfDomain("point outside [0, 1)");
  for (int i = 0; i < n(); ++i)
    if ((x - a(i + 1)).sign() < 0) return i;
  throw OutOfDomain("point outside [0, 1)");
}

bool CetMap::is_singular(const FieldElement& x) const {
  for (int i = 0; i < n(); ++i)
    if (x == a(i)) return true;
  return false;
}

FieldElement CetMap::evaluate(const FieldElement& x) const {
  int i = interval_of(x);
  return (tau_ + a(i) + a(i + 1) - x).mod1();
}

FlipIet cet_to_ietf(const CetMap& F) {
  const auto spec = F.spec();
  const FieldElement one = spec->one();
  int n = F.n();

  // Image of piece i is [tau + a(i), tau + a(i+1)) traversed backwards; the
  // piece whose image strictly contains the marked point 1 (= 0) is cut.
  int wrap = -1;
  for (int i = 0; i < n; ++i) {
    FieldElement s = F.tau() + F.a(i), e = F.tau() + F.a(i + 1);
    if ((s - one).sign() < 0 && (e - one).sign() > 0) {
      wrap = i;
      break;
    }
  }

  struct Piece {
    FieldElement len, image_start;
  };
  std::vector<Piece> pieces;  // in domain order
  for (int i = 0; i < n; ++i) {
    FieldElement s = F.tau() + F.a(i), e = F.tau() + F.a(i + 1);
    if (i == wrap) {
      // Left domain part maps to the wrapped image [0, e-1), right part to
      // [s, 1).
      pieces.push_back({e - one, spec->zero()});
      pieces.push_back({one - s, s});
    } else {
      FieldElement start = (s - one).sign() >= 0 ? s - one : s;
      pieces.push_back({F.lengths()[static_cast<size_t>(i)], start});
    }
  }

  int m = static_cast<int>(pieces.size());
  std::vector<Letter> top(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) top[static_cast<size_t>(i)] = static_cast<Letter>('A' + i);
  std::vector<int> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return (pieces[static_cast<size_t>(x)].image_start - pieces[static_cast<size_t>(y)].image_start)
               .sign() < 0;
  });
  std::vector<Letter> bot;
  bot.reserve(static_cast<size_t>(m));
  for (int idx : order) bot.push_back(static_cast<Letter>('A' + idx));

  GenPerm perm(top, bot);
  FlipVector flips(static_cast<size_t>(m), -1);
  std::vector<FieldElement> lengths(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    lengths[static_cast<size_t>(perm.alpha_index(static_cast<Letter>('A' + i)))] =
        pieces[static_cast<size_t>(i)].len;
  return FlipIet(std::move(perm), std::move(flips), std::move(lengths));
}

SquaredIet::SquaredIet(std::vector<SquaredPiece> pieces, bool circle)
    : pieces_(std::move(pieces)), circle_(circle) {}

FieldElement SquaredIet::evaluate(const FieldElement& x) const {
  for (const auto& p : pieces_) {
    if ((x - p.start).sign() >= 0 && (x - p.start - p.len).sign() < 0) {
      FieldElement y = x + p.shift;
      return circle_ ? y.mod1() : y;
    }
  }
  throw OutOfDomain("point outside the squared map's domain");
}

SquaredIet square(const CetMap& F) {
  const auto spec = F.spec();
  int n = F.n();
  std::vector<SquaredPiece> out;
  for (int i = 0; i < n; ++i) {
    FieldElement c = F.tau() + F.a(i) + F.a(i + 1);
    // Cut points: preimages of circle singularities falling strictly inside
    // piece i.
    std::vector<FieldElement> cuts{F.a(i)};
    for (int j = 0; j < n; ++j) {
      FieldElement pre = (c - F.a(j)).mod1();
      if ((pre - F.a(i)).sign() > 0 && (pre - F.a(i + 1)).sign() < 0) cuts.push_back(pre);
    }
    cuts.push_back(F.a(i + 1));
    std::sort(cuts.begin(), cuts.end(),
              [](const FieldElement& x, const FieldElement& y) { return (x - y).sign() < 0; });
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      FieldElement len = cuts[k + 1] - cuts[k];
      if (len.sign() <= 0) continue;
      FieldElement mid = cuts[k] + len / Rational(2);
      FieldElement y = F.evaluate(mid);
      int j = F.interval_of(y);
      FieldElement shift = (F.evaluate(y) - mid).mod1();
      out.push_back({cuts[k], len, shift, i, j});
    }
  }
  return SquaredIet(std::move(out), true);
}

SquaredIet square(const FlipIet& F) {
  if (!F.fully_flipped())
    throw NotFullyFlipped("squares are taken of fully flipped maps only");
  std::vector<SquaredPiece> out;
  const GenPerm& perm = F.perm();
  for (int i = 0; i < F.size(); ++i) {
    Letter X = perm.top_at(i);
    FieldElement m = F.top_end(X) + F.bot_start(X);  // F(x) = m - x on the piece
    std::vector<FieldElement> cuts{F.top_start(X)};
    for (int j = 1; j < F.size(); ++j) {
      FieldElement pre = m - F.alpha_top(j);
      if ((pre - F.top_start(X)).sign() > 0 && (pre - F.top_end(X)).sign() < 0)
        cuts.push_back(pre);
    }
    cuts.push_back(F.top_end(X));
    std::sort(cuts.begin(), cuts.end(),
              [](const FieldElement& x, const FieldElement& y) { return (x - y).sign() < 0; });
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      FieldElement len = cuts[k + 1] - cuts[k];
      if (len.sign() <= 0) continue;
      FieldElement mid = cuts[k] + len / Rational(2);
      FieldElement y = F.evaluate(mid);
      Letter Y = F.piece_at(y);
      FieldElement shift = F.evaluate(y) - mid;
      out.push_back({cuts[k], len, shift, perm.alpha_index(X), perm.alpha_index(Y)});
    }
  }
  std::sort(out.begin(), out.end(), [](const SquaredPiece& a, const SquaredPiece& b) {
    return (a.start - b.start).sign() < 0;
  });
  return SquaredIet(std::move(out), false);
}

CetMap triangle_to_cet3(const FieldElement& l1, const FieldElement& l2, const FieldElement& l3,
                        const FieldElement& tau) {
  FieldElement sum = l1 + l2 + l3;
  if (!(sum == l1.spec()->one()))
    throw AngleSumNotOne("normalized angles must sum to 1");
  return CetMap({l1, l2, l3}, tau);
}

CetMap quad_to_cet4(const std::vector<FieldElement>& arcs, const FieldElement& tau) {
  if (arcs.size() != 4) throw Error("quadrilateral needs 4 arcs");
  FieldElement sum = arcs[0] + arcs[1] + arcs[2] + arcs[3];
  if (!(sum == arcs[0].spec()->one()))
    throw AngleSumNotOne("normalized arc lengths must sum to 1");
  return CetMap(arcs, tau);
}

std::vector<FieldElement> lambda_from_params(const FieldElement& l1, const FieldElement& l2,
                                             const FieldElement& l3, const FieldElement& tau) {
  std::vector<FieldElement> lambda{l1, tau - l3, l2 + l3 - tau, l3};
  for (const auto& l : lambda)
    if (l.sign() <= 0)
      throw CombinatoricsMismatch(
          "marked point is not in the image of the second interval; use cet_to_ietf");
  return lambda;
}

FieldElement hyperplane_residual(const std::vector<FieldElement>& lambda) {
  if (lambda.size() != 4) throw Error("hyperplane residual is defined for 4 lengths");
  return lambda[0] - lambda[1] + lambda[2] - lambda[3];
}

}  // namespace flipiet
