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
#include <string>
#include <vector>

#include "flipiet/errors.hpp"

namespace flipiet {

using Letter = char;

// A generalized permutation: two orders (top and bottom row) on the same
// alphabet. The alphabet is kept sorted; flips and lengths elsewhere are
// indexed by position in the sorted alphabet.
class GenPerm {
 public:
  GenPerm() = default;
  GenPerm(std::vector<Letter> top, std::vector<Letter> bot);

  int size() const { return static_cast<int>(top_.size()); }
  const std::vector<Letter>& top() const { return top_; }
  const std::vector<Letter>& bot() const { return bot_; }
  const std::vector<Letter>& alphabet() const { return alphabet_; }

  int alpha_index(Letter l) const;
  Letter top_at(int i) const { return top_[static_cast<size_t>(i)]; }
  Letter bot_at(int i) const { return bot_[static_cast<size_t>(i)]; }
  int top_pos(Letter l) const;
  int bot_pos(Letter l) const;

  // Smallest l in [1, n-1] such that the first l letters of both rows form
  // the same set; nullopt when irreducible.
  std::optional<int> reducible_at() const;
  bool is_reducible() const { return reducible_at().has_value(); }

  friend bool operator==(const GenPerm& a, const GenPerm& b) {
    return a.top_ == b.top_ && a.bot_ == b.bot_;
  }
  friend bool operator!=(const GenPerm& a, const GenPerm& b) { return !(a == b); }

 private:
  std::vector<Letter> top_, bot_, alphabet_;
};

// Flip data: +1 / -1 per letter, indexed by sorted-alphabet position.
using FlipVector = std::vector<int8_t>;

// Parses compact combinatorics like "A~BC~D~/D~A~C~B" where '~' marks a
// flipped letter. Flip marks must agree between the rows.
std::pair<GenPerm, FlipVector> parse_combinatorics(const std::string& text);
std::string format_combinatorics(const GenPerm& perm, const FlipVector& flips);

}  // namespace flipiet
