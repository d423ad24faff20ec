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

#include "flipiet/gen_perm.hpp"

namespace flipiet {

// A block of a simple map: the two rows factor into aligned words, each block
// a periodic cylinder (equal words), a cylinder of rotation (xy / yx, no
// flips), or a rotation with a marked singularity (xyz against one of zyx,
// zxy, yzx; no flips).
struct SimpleBlock {
  enum class Kind { PeriodicCylinder, RotationCylinder, RotationMarkedSingularity };
  Kind kind;
  std::vector<Letter> top_word, bot_word;
};

struct SimpleDecomposition {
  std::vector<SimpleBlock> blocks;
};

// Greedy leftmost factorization at balanced prefixes (the reducibility
// criterion), then per-block classification; adjacent periodic one-letter
// blocks are merged for reporting. nullopt when the map is not simple.
std::optional<SimpleDecomposition> is_simple(const GenPerm& perm, const FlipVector& flips);

}  // namespace flipiet
