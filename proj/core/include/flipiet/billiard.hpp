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

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flipiet/cet.hpp"
#include "flipiet/gasket.hpp"
#include "flipiet/induction.hpp"

namespace flipiet {

// Tile shape as normalized angles; plane embedding uses the unit
// circumcircle with A at angle 0 and counterclockwise arcs
// A->B = l3, B->C = l1, C->A = l2 (the arc over each side subtends twice the
// opposite angle). Plane coordinates are doubles, for output only; all
// decisions run on the l's.
struct TriangleShape {
  FieldElement l1, l2, l3;

  static TriangleShape make(FieldElement l1, FieldElement l2, FieldElement l3);
  bool acute() const;
  bool obtuse() const;

  // Vertex positions A, B, C and the lattice basis u = B-A, v = C-A.
  std::array<std::array<double, 2>, 3> vertices() const;
  std::array<double, 2> lattice_u() const;
  std::array<double, 2> lattice_v() const;
};

struct SymbolicWord {
  std::string letters;
  bool singular_hit = false;
  long singular_step = -1;  // step at which the orbit hit a singularity
};

// Letters of the continuity intervals visited by x0, F(x0), ...; 'a' + i for
// interval i. Truncated with a report when an iterate lands exactly on a
// singularity.
SymbolicWord symbolic_orbit(const CetMap& F, const FieldElement& x0, long steps);

// Whether the circle point corresponds to an actual triangle billiard
// trajectory: the folded chord must cross the inscribed triangle.
bool triangle_valid_x0(const CetMap& F, const FieldElement& x0);

struct Closed {
  long segment_period;
  std::string word;  // one geometric period
};
struct DriftPeriodic {
  long word_period;
  std::array<long, 2> drift;  // tile-lattice translation over one period
  std::string word;
};
struct LinearEscape {
  long induction_stop_step;
  std::string word_prefix;
};
struct NonlinearEscapeCandidate {
  long gasket_depth;
  double max_len_at_budget;
  std::string word_prefix;
};
struct OrbitInconclusive {
  bool singular_hit;
  long step;
  std::string word_prefix;
};
using TrajectoryClass =
    std::variant<Closed, DriftPeriodic, LinearEscape, NonlinearEscapeCandidate, OrbitInconclusive>;

struct ClassifyBudgets {
  long orbit_steps = 20000;
  long induction_steps = 100000;
  long gasket_depth_threshold = 50;
};

// Exact first-return classification for 3- and 4-interval circle maps.
// Closed vs drift-periodic is decided by the exact tile-lattice translation
// over one geometric period.
TrajectoryClass classify(const CetMap& F, const FieldElement& x0, ClassifyBudgets budgets = {});

// Piecewise-linear curve of two-step displacements: lattice points are exact
// integer coordinates in the basis (AB, AC); plane points use the shape's
// embedding.
struct CombinatorialOrbit {
  std::vector<std::array<long, 2>> lattice_points;
  std::vector<std::array<double, 2>> plane_points;
  bool closed;
};
CombinatorialOrbit combinatorial_orbit(const std::string& word, const TriangleShape& shape);

// ||S_N|| / N at the checkpoints, S_N the sum of consecutive-letter
// displacement vectors; the lattice sums are exact, norms are doubles.
struct DisplacementPoint {
  long n;
  std::array<long, 2> lattice_sum;
  double norm_over_n;
};
std::vector<DisplacementPoint> displacement_growth(const std::string& word,
                                                   const TriangleShape& shape,
                                                   const std::vector<long>& checkpoints);

// Empirical tree test for a closed orbit: the tiling vertices and edges
// enclosed by the trajectory, tested for connectivity and acyclicity. Exact
// integer computation on the tile lattice.
struct TreeReport {
  bool is_tree;
  long vertices, edges;
  bool connected, acyclic;
};
TreeReport tree_check(const std::string& closed_word);

// Return-word factorization used to surface the sturmian structure of
// linear-escape codings: a letter with exactly two distinct return words,
// plus a crude balance check of their occurrence sequence.
struct SturmianReport {
  char letter;
  std::string w1, w2;
  bool balanced;
};
std::optional<SturmianReport> sturmian_factorization(const std::string& word);

}  // namespace flipiet
