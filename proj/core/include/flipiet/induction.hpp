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

#include "flipiet/flip_iet.hpp"

namespace flipiet {

enum class Side { Top, Bottom };

// One induction step: the longer of the two end intervals wins, keeps its
// label and shrinks by the loser's length. The transition matrix is
// A_e = Id + E_{winner,loser}.
struct InductionEdge {
  Letter winner = 0, loser = 0;
  Side side = Side::Top;
};

// Small dense integer matrix indexed by sorted-alphabet position.
class IntMatrix {
 public:
  explicit IntMatrix(int n);  // identity
  int n() const { return n_; }
  const Int& at(int r, int c) const { return m_[static_cast<size_t>(r * n_ + c)]; }
  Int& at(int r, int c) { return m_[static_cast<size_t>(r * n_ + c)]; }
  // In-place right multiplication by Id + E_{w,l}: column l += column w.
  void right_mul_elementary(int w, int l);
  // w <- A^T v  (loser coordinate gains the winner's).
  static void apply_transpose_elementary(std::vector<Int>& v, int w, int l);
  Int determinant() const;
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

 private:
  int n_;
  std::vector<Int> m_;
};

IntMatrix edge_matrix(const GenPerm& perm, const InductionEdge& e);

// Combinatorial induction on (perm, flips) alone, for a chosen branch (which
// row's end letter is assumed to win). Returns nullopt at a stop vertex
// (same last letter in both rows).
struct CombData {
  GenPerm perm;
  FlipVector flips;
};
std::optional<CombData> comb_step(const GenPerm& perm, const FlipVector& flips, Side winner_side,
                                  Letter* out_winner = nullptr, Letter* out_loser = nullptr);

// One step of the modified Rauzy induction; stopped exactly when the two end
// intervals have equal length.
struct StepResult {
  bool stopped = false;
  std::optional<FlipIet> next;
  std::optional<InductionEdge> edge;
};
StepResult step(const FlipIet& F);

struct IterateOptions {
  bool record_history = false;   // per-step max interval length
  bool verify_matrices = true;   // check lambda^(m) = A_(m)^{-1} lambda
  int verify_stride = 32;
};

struct InductionOrbit {
  std::vector<InductionEdge> steps;
  FlipIet final;  // the map when iteration ended (the stopped map if stopped)
  bool stopped = false;
  std::vector<FieldElement> length_history;  // max length per step when recorded
  IntMatrix product;                         // A_(m) over the executed steps
};

InductionOrbit iterate(const FlipIet& F, long max_steps, IterateOptions opts = {});

struct MinimalityCertificate {
  enum class Kind { StoppedAt, ShrinkingNoStop, Inconclusive } kind;
  long steps = 0;          // steps executed (stop step for StoppedAt)
  double max_len = 0.0;    // max interval length at exit (approximate, for reporting)
};

// Runs the induction without bookkeeping. StoppedAt when the induction
// reaches the tie; ShrinkingNoStop when the budget is exhausted with all
// lengths below shrink_threshold; Inconclusive otherwise.
MinimalityCertificate minimality_certificate(const FlipIet& F, long max_steps,
                                             const Rational& shrink_threshold);

}  // namespace flipiet
