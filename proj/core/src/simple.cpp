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

#include "flipiet/simple.hpp"

#include <algorithm>
#include <set>

namespace flipiet {

namespace {

using Word = std::vector<Letter>;

bool equal_words(const Word& a, const Word& b) { return a == b; }

Word cat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word cat(const Word& a, const Word& b, const Word& c) { return cat(cat(a, b), c); }

std::optional<SimpleBlock::Kind> classify_block(const Word& top, const Word& bot,
                                                const GenPerm& perm, const FlipVector& flips) {
  if (equal_words(top, bot)) return SimpleBlock::Kind::PeriodicCylinder;
  for (Letter l : top)
    if (flips[static_cast<size_t>(perm.alpha_index(l))] == -1) return std::nullopt;
  size_t n = top.size();
  // xy / yx
  for (size_t cut = 1; cut < n; ++cut) {
    Word x(top.begin(), top.begin() + static_cast<long>(cut));
    Word y(top.begin() + static_cast<long>(cut), top.end());
    if (equal_words(bot, cat(y, x))) return SimpleBlock::Kind::RotationCylinder;
  }
  // xyz / {zyx, zxy, yzx}
  for (size_t c1 = 1; c1 + 1 < n; ++c1) {
    for (size_t c2 = c1 + 1; c2 < n; ++c2) {
      Word x(top.begin(), top.begin() + static_cast<long>(c1));
      Word y(top.begin() + static_cast<long>(c1), top.begin() + static_cast<long>(c2));
      Word z(top.begin() + static_cast<long>(c2), top.end());
      if (equal_words(bot, cat(z, y, x)) || equal_words(bot, cat(z, x, y)) ||
          equal_words(bot, cat(y, z, x)))
        return SimpleBlock::Kind::RotationMarkedSingularity;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SimpleDecomposition> is_simple(const GenPerm& perm, const FlipVector& flips) {
  int n = perm.size();
  // Finest factorization: cut at every balanced prefix.
  std::vector<int> cuts{0};
  std::set<Letter> ts, bs;
  for (int l = 1; l < n; ++l) {
    ts.insert(perm.top_at(l - 1));
    bs.insert(perm.bot_at(l - 1));
    if (ts == bs) cuts.push_back(l);
  }
  cuts.push_back(n);

  SimpleDecomposition dec;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    Word top, bot;
    for (int i = cuts[k]; i < cuts[k + 1]; ++i) {
      top.push_back(perm.top_at(i));
      bot.push_back(perm.bot_at(i));
    }
    auto kind = classify_block(top, bot, perm, flips);
    if (!kind) return std::nullopt;
    // Merge runs of periodic one-letter blocks for reporting.
    if (*kind == SimpleBlock::Kind::PeriodicCylinder && !dec.blocks.empty() &&
        dec.blocks.back().kind == SimpleBlock::Kind::PeriodicCylinder &&
        equal_words(dec.blocks.back().top_word, dec.blocks.back().bot_word)) {
      dec.blocks.back().top_word = cat(dec.blocks.back().top_word, top);
      dec.blocks.back().bot_word = cat(dec.blocks.back().bot_word, bot);
      continue;
    }
    dec.blocks.push_back({*kind, std::move(top), std::move(bot)});
  }
  return dec;
}

}  // namespace flipiet
