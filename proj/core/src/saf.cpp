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

#include "flipiet/saf.hpp"

#include <sstream>

#include "flipiet/induction.hpp"

namespace flipiet {

SafTensor::SafTensor(int dim)
    : dim_(dim), m_(static_cast<size_t>(dim) * static_cast<size_t>(dim), Rational(0)) {}

bool SafTensor::is_zero() const {
  for (const auto& x : m_)
    if (sgn(x) != 0) return false;
  return true;
}

std::string SafTensor::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < dim_; ++r) {
    os << (r ? "; " : "[");
    for (int s = 0; s < dim_; ++s) os << (s ? " " : "") << at(r, s);
  }
  os << "]";
  return os.str();
}

SafTensor saf_of_pieces(const std::vector<std::pair<FieldElement, FieldElement>>& pieces) {
  if (pieces.empty()) return SafTensor(1);
  const auto spec = pieces[0].first.spec();
  int d = spec->degree();
  SafTensor t(d);
  for (const auto& [len, shift] : pieces) {
    if (len.spec().get() != spec.get() || shift.spec().get() != spec.get())
      throw FieldMismatch("SAF pieces must lie in one registered field");
    for (int r = 0; r < d; ++r) {
      if (sgn(len.coeffs()[static_cast<size_t>(r)]) == 0) continue;
      for (int s = 0; s < d; ++s)
        t.at(r, s) += len.coeffs()[static_cast<size_t>(r)] * shift.coeffs()[static_cast<size_t>(s)];
    }
  }
  return t;
}

SafTensor saf(const FlipIet& T) {
  if (T.has_flip()) throw Error("SAF is defined for exchanges without flips");
  std::vector<std::pair<FieldElement, FieldElement>> pieces;
  for (Letter l : T.perm().alphabet())
    pieces.emplace_back(T.length_of(l), T.bot_start(l) - T.top_start(l));
  return saf_of_pieces(pieces);
}

SafTensor saf(const SquaredIet& T) {
  std::vector<std::pair<FieldElement, FieldElement>> pieces;
  for (const auto& p : T.pieces()) {
    if (!T.circle()) {
      pieces.emplace_back(p.len, p.shift);
      continue;
    }
    // Cut circle translations at the wrap point so shifts act on intervals.
    const auto spec = p.len.spec();
    FieldElement one = spec->one();
    FieldElement shift = p.shift.mod1();
    FieldElement end = p.start + p.len;
    FieldElement wrap_pre = one - shift;  // image of [wrap_pre, ...) wraps past 1
    if ((wrap_pre - p.start).sign() > 0 && (wrap_pre - end).sign() < 0) {
      pieces.emplace_back(wrap_pre - p.start, shift);
      pieces.emplace_back(end - wrap_pre, shift - one);
    } else {
      bool wraps = (p.start + shift - one).sign() >= 0;
      pieces.emplace_back(p.len, wraps ? shift - one : shift);
    }
  }
  return saf_of_pieces(pieces);
}

SafTensor saf_of_square(const FlipIet& F) { return saf(square(F)); }
SafTensor saf_of_square(const CetMap& F) { return saf(square(F)); }

bool saf_rauzy_invariance_check(const FlipIet& T, long steps) {
  SafTensor base = saf(T);
  FlipIet cur = T;
  for (long m = 0; m < steps; ++m) {
    StepResult r = step(cur);
    if (r.stopped) return true;
    cur = std::move(*r.next);
    if (saf(cur) != base) return false;
  }
  return true;
}

}  // namespace flipiet
