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

#include "flipiet/field.hpp"
#include "flipiet/gen_perm.hpp"

namespace flipiet {

// An interval exchange transformation with flips on [0, total), given by the
// triple (perm, flips, lengths). Continuity intervals are left-closed
// right-open; flipped pieces evaluate by the same formula at their left
// endpoint, so the map is a bijection off the finite singular set only.
class FlipIet {
 public:
  FlipIet() = default;
  FlipIet(GenPerm perm, FlipVector flips, std::vector<FieldElement> lengths);

  const GenPerm& perm() const { return perm_; }
  const FlipVector& flips() const { return flips_; }
  const std::vector<FieldElement>& lengths() const { return lengths_; }
  const FieldSpec::Ptr& spec() const { return spec_; }
  int size() const { return perm_.size(); }

  int flip_of(Letter l) const { return flips_[static_cast<size_t>(perm_.alpha_index(l))]; }
  const FieldElement& length_of(Letter l) const {
    return lengths_[static_cast<size_t>(perm_.alpha_index(l))];
  }
  const FieldElement& total() const { return total_; }

  // Partial sums alpha_j over the first j letters of each row, j in [0, n].
  const FieldElement& alpha_top(int j) const { return alpha_top_[static_cast<size_t>(j)]; }
  const FieldElement& alpha_bot(int j) const { return alpha_bot_[static_cast<size_t>(j)]; }
  FieldElement top_start(Letter l) const { return alpha_top(perm_.top_pos(l)); }
  FieldElement top_end(Letter l) const { return alpha_top(perm_.top_pos(l) + 1); }
  FieldElement bot_start(Letter l) const { return alpha_bot(perm_.bot_pos(l)); }
  FieldElement bot_end(Letter l) const { return alpha_bot(perm_.bot_pos(l) + 1); }

  bool fully_flipped() const;
  bool has_flip() const;

  Letter piece_at(const FieldElement& x) const;  // OutOfDomain outside [0, total)
  FieldElement evaluate(const FieldElement& x) const;
  FieldElement evaluate_inverse(const FieldElement& y) const;

  friend bool operator==(const FlipIet& a, const FlipIet& b) {
    return a.perm_ == b.perm_ && a.flips_ == b.flips_ && a.lengths_ == b.lengths_;
  }

 private:
  GenPerm perm_;
  FlipVector flips_;
  std::vector<FieldElement> lengths_;  // by sorted-alphabet index
  FieldSpec::Ptr spec_;
  FieldElement total_;
  std::vector<FieldElement> alpha_top_, alpha_bot_;
};

// Validating factory. When strict_ietf is set, a map with no flipped letter
// is rejected (AllFlipsTrivial).
FlipIet make_flip_iet(const GenPerm& perm, const FlipVector& flips,
                      const std::vector<FieldElement>& lengths, bool strict_ietf = false);

// Convenience: combinatorics from parse_combinatorics plus lengths listed in
// top-row order.
FlipIet make_flip_iet(const std::string& combinatorics,
                      const std::vector<FieldElement>& lengths_in_top_order,
                      bool strict_ietf = false);

}  // namespace flipiet
