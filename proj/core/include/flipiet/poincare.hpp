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
#include <variant>
#include <vector>

#include "flipiet/induction.hpp"
#include "flipiet/simple.hpp"

namespace flipiet {

// The section built from repeated induction stops: each stop peels off the
// terminal self-mapped interval J (a periodic piece of the first-return
// dynamics), the construction recurses on the left remainder, and reducible
// remainders are processed per component.
struct PoincareRauzySection {
  struct PeriodicPiece {
    FieldElement start, len;  // absolute within the original interval
    Letter label;
    bool flipped;
    int stage;
  };
  struct FinalPart {
    FieldElement offset;
    FlipIet map;  // simple
    SimpleDecomposition decomposition;
    int stage;
  };
  std::vector<PeriodicPiece> periodic_pieces;
  std::vector<FinalPart> finals;
};

struct PoincareFailure {
  // DegenerateTie: the induction stopped on an exact length tie of two
  // distinct letters, which happens only for rationally dependent lengths;
  // the construction is reported inconclusive rather than perturbed.
  enum class Reason { RecursionBudgetExceeded, NonSimpleTerminal, DegenerateTie } reason;
  // For NonSimpleTerminal, the residual IET without flips that is not simple.
  std::optional<FlipIet> residual;
  FieldElement offset;
  int stage = 0;
};

using PoincareResult = std::variant<PoincareRauzySection, PoincareFailure>;

struct PoincareOptions {
  long step_budget = 10000;  // induction steps per stage
  int max_stages = 32;
};

PoincareResult poincare_rauzy(const FlipIet& F, PoincareOptions opts = {});

struct IntegrabilityVerdict {
  enum class Kind { Integrable, NotIntegrable, Inconclusive } kind;
  PoincareResult witness;
};

IntegrabilityVerdict is_integrable(const FlipIet& F, PoincareOptions opts = {});

// True iff every self-mapped continuity interval of the return map on the
// section is flipped (the peeled periodic pieces, plus periodic-cylinder
// letters inside the final simple parts).
bool periodic_intervals_flipped(const PoincareRauzySection& section);

}  // namespace flipiet
