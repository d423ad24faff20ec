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
#include <vector>

#include "flipiet/cet.hpp"

namespace flipiet {

// Coordinates of sum_i lambda_i (x) t_i in F (x)_Q F over the power basis:
// M[r][s] = sum_i (lambda_i)_r (t_i)_s. Zero iff every entry vanishes.
class SafTensor {
 public:
  explicit SafTensor(int dim);
  int dim() const { return dim_; }
  const Rational& at(int r, int s) const { return m_[static_cast<size_t>(r * dim_ + s)]; }
  Rational& at(int r, int s) { return m_[static_cast<size_t>(r * dim_ + s)]; }
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const SafTensor& a, const SafTensor& b) {
    return a.dim_ == b.dim_ && a.m_ == b.m_;
  }
  friend bool operator!=(const SafTensor& a, const SafTensor& b) { return !(a == b); }

 private:
  int dim_;
  std::vector<Rational> m_;
};

// SAF of a list of translation pieces (length, shift), all in one field.
SafTensor saf_of_pieces(const std::vector<std::pair<FieldElement, FieldElement>>& pieces);

// SAF of an interval exchange without flips (FieldMismatch when the map has
// a flipped letter).
SafTensor saf(const FlipIet& T);

// SAF of a squared map; circle squares are cut at 0 first so every piece is a
// genuine interval translation.
SafTensor saf(const SquaredIet& T);

// square(F) then saf; zero for every fully flipped map.
SafTensor saf_of_square(const FlipIet& F);
SafTensor saf_of_square(const CetMap& F);

// SAF equality along up to `steps` induction steps (vacuously true past a
// stop).
bool saf_rauzy_invariance_check(const FlipIet& T, long steps);

}  // namespace flipiet
