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

#include "flipiet/induction.hpp"

#include <algorithm>

namespace flipiet {

IntMatrix::IntMatrix(int n) : n_(n), m_(static_cast<size_t>(n) * static_cast<size_t>(n), Int(0)) {
  for (int i = 0; i < n; ++i) at(i, i) = 1;
}

void IntMatrix::right_mul_elementary(int w, int l) {
  for (int r = 0; r < n_; ++r) at(r, l) += at(r, w);
}

void IntMatrix::apply_transpose_elementary(std::vector<Int>& v, int w, int l) {
  v[static_cast<size_t>(l)] += v[static_cast<size_t>(w)];
}

Int IntMatrix::determinant() const {
  // Fraction-free Gaussian elimination (Bareiss); n is tiny here.
  std::vector<std::vector<Rational>> a(static_cast<size_t>(n_),
                                       std::vector<Rational>(static_cast<size_t>(n_)));
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = at(r, c);
  Rational det(1);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r)
      if (sgn(a[static_cast<size_t>(r)][static_cast<size_t>(col)]) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(col)]);
      det = -det;
    }
    Rational p = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
    det *= p;
    for (int r = col + 1; r < n_; ++r) {
      Rational f = a[static_cast<size_t>(r)][static_cast<size_t>(col)] / p;
      for (int c = col; c < n_; ++c)
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * a[static_cast<size_t>(col)][static_cast<size_t>(c)];
    }
  }
  return det.get_num();
}

std::vector<FieldElement> IntMatrix::apply(const std::vector<FieldElement>& v) const {
  std::vector<FieldElement> out(static_cast<size_t>(n_));
  for (int r = 0; r < n_; ++r) {
    FieldElement acc = v[0].spec()->zero();
    for (int c = 0; c < n_; ++c) {
      const Int& k = at(r, c);
      if (k != 0) acc = acc + v[static_cast<size_t>(c)] * Rational(k);
    }
    out[static_cast<size_t>(r)] = acc;
  }
  return out;
}

IntMatrix edge_matrix(const GenPerm& perm, const InductionEdge& e) {
  IntMatrix m(perm.size());
  m.at(perm.alpha_index(e.winner), perm.alpha_index(e.loser)) += 1;
  return m;
}

std::optional<CombData> comb_step(const GenPerm& perm, const FlipVector& flips, Side winner_side,
                                  Letter* out_winner, Letter* out_loser) {
  int n = perm.size();
  Letter top_last = perm.top_at(n - 1), bot_last = perm.bot_at(n - 1);
  if (top_last == bot_last) return std::nullopt;

  Letter winner = winner_side == Side::Top ? top_last : bot_last;
  Letter loser = winner_side == Side::Top ? bot_last : top_last;
  int kw = flips[static_cast<size_t>(perm.alpha_index(winner))];

  // The winner's row keeps its order. In the other row the loser leaves the
  // last slot and reappears next to the winner: after it when the winner is
  // unflipped, before it when flipped.
  const std::vector<Letter>& keep = winner_side == Side::Top ? perm.top() : perm.bot();
  std::vector<Letter> other = winner_side == Side::Top ? perm.bot() : perm.top();
  other.pop_back();
  auto wpos = std::find(other.begin(), other.end(), winner);
  other.insert(kw == 1 ? wpos + 1 : wpos, loser);

  FlipVector nf = flips;
  int li = perm.alpha_index(loser);
  nf[static_cast<size_t>(li)] = static_cast<int8_t>(nf[static_cast<size_t>(li)] * kw);

  if (out_winner) *out_winner = winner;
  if (out_loser) *out_loser = loser;
  GenPerm np = winner_side == Side::Top ? GenPerm(keep, other) : GenPerm(other, keep);
  return CombData{std::move(np), std::move(nf)};
}

StepResult step(const FlipIet& F) {
  int n = F.size();
  if (n < 2) return {true, std::nullopt, std::nullopt};
  Letter top_last = F.perm().top_at(n - 1), bot_last = F.perm().bot_at(n - 1);
  if (top_last == bot_last) return {true, std::nullopt, std::nullopt};

  int cmp = (F.length_of(top_last) - F.length_of(bot_last)).sign();
  if (cmp == 0) return {true, std::nullopt, std::nullopt};
  Side side = cmp > 0 ? Side::Top : Side::Bottom;

  Letter winner, loser;
  auto comb = comb_step(F.perm(), F.flips(), side, &winner, &loser);
  std::vector<FieldElement> lengths = F.lengths();
  int wi = F.perm().alpha_index(winner), li = F.perm().alpha_index(loser);
  lengths[static_cast<size_t>(wi)] =
      lengths[static_cast<size_t>(wi)] - lengths[static_cast<size_t>(li)];
  StepResult r;
  r.stopped = false;
  r.next = FlipIet(comb->perm, comb->flips, std::move(lengths));
  r.edge = InductionEdge{winner, loser, side};
  return r;
}

namespace {

FieldElement max_length(const FlipIet& F) {
  FieldElement m = F.lengths()[0];
  for (size_t i = 1; i < F.lengths().size(); ++i)
    if ((F.lengths()[i] - m).sign() > 0) m = F.lengths()[i];
  return m;
}

}  // namespace

InductionOrbit iterate(const FlipIet& F, long max_steps, IterateOptions opts) {
  InductionOrbit orbit{.steps = {}, .final = F, .stopped = false, .length_history = {},
                       .product = IntMatrix(F.size())};
  FlipIet cur = F;
  for (long m = 0; m < max_steps; ++m) {
    StepResult r = step(cur);
    if (r.stopped) {
      orbit.stopped = true;
      break;
    }
    orbit.steps.push_back(*r.edge);
    orbit.product.right_mul_elementary(cur.perm().alpha_index(r.edge->winner),
                                       cur.perm().alpha_index(r.edge->loser));
    cur = std::move(*r.next);
    if (opts.record_history) orbit.length_history.push_back(max_length(cur));
    if (opts.verify_matrices &&
        (m % std::max(1, opts.verify_stride) == 0 || m + 1 == max_steps)) {
      std::vector<FieldElement> back = orbit.product.apply(cur.lengths());
      for (size_t i = 0; i < back.size(); ++i)
        if (!(back[i] == F.lengths()[i]))
          throw Error("induction bookkeeping failed: A_(m) lambda^(m) != lambda");
    }
  }
  orbit.final = cur;
  if (opts.verify_matrices && !orbit.steps.empty()) {
    std::vector<FieldElement> back = orbit.product.apply(cur.lengths());
    for (size_t i = 0; i < back.size(); ++i)
      if (!(back[i] == F.lengths()[i]))
        throw Error("induction bookkeeping failed: A_(m) lambda^(m) != lambda");
  }
  return orbit;
}

MinimalityCertificate minimality_certificate(const FlipIet& F, long max_steps,
                                             const Rational& shrink_threshold) {
  FlipIet cur = F;
  for (long m = 0; m < max_steps; ++m) {
    StepResult r = step(cur);
    if (r.stopped) return {MinimalityCertificate::Kind::StoppedAt, m, max_length(cur).to_double()};
    cur = std::move(*r.next);
  }
  FieldElement ml = max_length(cur);
  bool shrunk = (ml - shrink_threshold).sign() < 0;
  return {shrunk ? MinimalityCertificate::Kind::ShrinkingNoStop
                 : MinimalityCertificate::Kind::Inconclusive,
          max_steps, ml.to_double()};
}

}  // namespace flipiet
