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

#include <vector>

#include "flipiet/flip_iet.hpp"

namespace flipiet {

// A fully flipped n-interval exchange on the circle R/Z with trivial interval
// permutation: every interval [a_{i-1}, a_i) is shifted by tau and flipped in
// place, F(x) = tau + a_{i-1} + a_i - x  (mod 1).
class CetMap {
 public:
  CetMap() = default;
  CetMap(std::vector<FieldElement> lengths, FieldElement tau);

  int n() const { return static_cast<int>(lengths_.size()); }
  const std::vector<FieldElement>& lengths() const { return lengths_; }
  const FieldElement& tau() const { return tau_; }
  const FieldSpec::Ptr& spec() const { return spec_; }

  // Cumulative endpoints, a(0) = 0, ..., a(n) = 1.
  const FieldElement& a(int i) const { return cum_[static_cast<size_t>(i)]; }

  int interval_of(const FieldElement& x) const;  // 0-based, x in [0,1)
  bool is_singular(const FieldElement& x) const;
  FieldElement evaluate(const FieldElement& x) const;

 private:
  std::vector<FieldElement> lengths_;
  FieldElement tau_;
  FieldSpec::Ptr spec_;
  std::vector<FieldElement> cum_;
};

// Circle-to-interval cut at the marked point 0: the image interval containing
// 0 is split in two, giving a fully flipped IET on [0,1) with n+1 letters (n
// letters when 0 is exactly an image singularity).
FlipIet cet_to_ietf(const CetMap& F);

// A piece of the square T = F^2: on [start, start+len), T translates by
// shift (mod 1 for circle squares). Labels i, j record the two continuity
// intervals visited.
struct SquaredPiece {
  FieldElement start, len, shift;
  int i, j;
};

// T = F^2 for a circle map: an IET without flips on the circle.
class SquaredIet {
 public:
  SquaredIet(std::vector<SquaredPiece> pieces, bool circle);
  const std::vector<SquaredPiece>& pieces() const { return pieces_; }
  bool circle() const { return circle_; }
  FieldElement evaluate(const FieldElement& x) const;

 private:
  std::vector<SquaredPiece> pieces_;  // sorted by start, a partition
  bool circle_;
};

SquaredIet square(const CetMap& F);
// Square of a fully flipped interval map (NotFullyFlipped otherwise).
SquaredIet square(const FlipIet& F);

// Normalized triangle angles (l1, l2, l3), summing to 1, to the circle map
// of the corresponding tiling billiard family.
CetMap triangle_to_cet3(const FieldElement& l1, const FieldElement& l2, const FieldElement& l3,
                        const FieldElement& tau);

// Cyclic-quadrilateral arc lengths to the 4-interval circle map.
CetMap quad_to_cet4(const std::vector<FieldElement>& arcs, const FieldElement& tau);

// Interval lengths (lambda_A, lambda_B, lambda_C, lambda_D) of the cut map
// for the irreducible combinatorics, valid when 0 lies in the image of the
// second interval; CombinatoricsMismatch otherwise.
std::vector<FieldElement> lambda_from_params(const FieldElement& l1, const FieldElement& l2,
                                             const FieldElement& l3, const FieldElement& tau);

// lambda_A - lambda_B + lambda_C - lambda_D, zero exactly on the invariant
// hyperplane (tau = 1/2).
FieldElement hyperplane_residual(const std::vector<FieldElement>& lambda);

}  // namespace flipiet
