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

#include <optional>
#include <vector>

#include "flipiet/cet.hpp"

namespace flipiet {

// A point of the open 2-simplex: three positive coordinates summing to 1.
struct SimplexPoint {
  FieldElement x1, x2, x3;

  static SimplexPoint make(FieldElement a, FieldElement b, FieldElement c);
  bool operator==(const SimplexPoint& o) const {
    return x1 == o.x1 && x2 == o.x2 && x3 == o.x3;
  }
};

// Subtract-the-dominant-and-renormalize step. None when no coordinate
// exceeds the sum of the other two (boundary ties count as None: the
// subtracted coordinate would leave the open simplex).
std::optional<SimplexPoint> gasket_step(const SimplexPoint& p);

struct GasketDepth {
  long depth;            // successful steps (== max_iters certifies at that depth)
  bool hit_degenerate;   // stopped on an exact boundary tie
};
GasketDepth gasket_depth(const SimplexPoint& p, long max_iters);

// (1 - 2 l1, 1 - 2 l2, 1 - 2 l3); NotAcute when some entry is <= 0.
SimplexPoint triangle_gasket_point(const FieldElement& l1, const FieldElement& l2,
                                   const FieldElement& l3);

// The square of an acute tau = 1/2 circle map against the six-interval
// exchange it must equal: paired piece lengths and the conjugating rotation.
struct ArSquareReport {
  // |I_{i,j}| for the six nonempty two-step pieces, with their (i, j) labels.
  std::vector<SquaredPiece> pieces;
  std::vector<FieldElement> pair_lengths;  // (1/2 - l1, 1/2 - l2, 1/2 - l3)
  std::vector<FieldElement> x;             // x_j = 1 - 2 l_j
  bool pairs_match;                        // |I_{i,j}| == |I_{j,i}| for all pairs
  FieldElement rotation_offset;            // F^2 = R_theta . AR . R_theta^{-1}
  bool pointwise_match;                    // checked on sample points
};

ArSquareReport ar_square_report(const FieldElement& l1, const FieldElement& l2,
                                const FieldElement& l3, int sample_points = 1000);

}  // namespace flipiet
