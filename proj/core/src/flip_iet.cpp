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

#include "flipiet/flip_iet.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace flipiet {

GenPerm::GenPerm(std::vector<Letter> top, std::vector<Letter> bot)
    : top_(std::move(top)), bot_(std::move(bot)) {
  if (top_.size() != bot_.size() || top_.empty())
    throw AlphabetMismatch("generalized permutation rows must be nonempty and equal length");
  std::set<Letter> ts(top_.begin(), top_.end()), bs(bot_.begin(), bot_.end());
  if (ts.size() != top_.size() || bs.size() != bot_.size() || ts != bs)
    throw AlphabetMismatch("rows must be orders of the same alphabet");
  alphabet_.assign(ts.begin(), ts.end());
}

int GenPerm::alpha_index(Letter l) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), l);
  if (it == alphabet_.end() || *it != l)
    throw AlphabetMismatch(std::string("letter not in alphabet: ") + l);
  return static_cast<int>(it - alphabet_.begin());
}

int GenPerm::top_pos(Letter l) const {
  for (int i = 0; i < size(); ++i)
    if (top_[static_cast<size_t>(i)] == l) return i;
  throw AlphabetMismatch(std::string("letter not in top row: ") + l);
}

int GenPerm::bot_pos(Letter l) const {
  for (int i = 0; i < size(); ++i)
    if (bot_[static_cast<size_t>(i)] == l) return i;
  throw AlphabetMismatch(std::string("letter not in bottom row: ") + l);
}

std::optional<int> GenPerm::reducible_at() const {
  std::set<Letter> ts, bs;
  for (int l = 1; l < size(); ++l) {
    ts.insert(top_[static_cast<size_t>(l - 1)]);
    bs.insert(bot_[static_cast<size_t>(l - 1)]);
    if (ts == bs) return l;
  }
  return std::nullopt;
}

std::pair<GenPerm, FlipVector> parse_combinatorics(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw ParseError("combinatorics needs 'top/bot': " + text);
  auto parse_row = [](const std::string& row) {
    std::vector<Letter> letters;
    std::vector<bool> flipped;
    for (char c : row) {
      if (c == ' ') continue;
      if (c == '~') {
        if (letters.empty()) throw ParseError("dangling '~'");
        flipped.back() = true;
        continue;
      }
      if (c < 'A' || c > 'Z') throw ParseError(std::string("bad letter: ") + c);
      letters.push_back(c);
      flipped.push_back(false);
    }
    return std::make_pair(letters, flipped);
  };
  auto [top, tflip] = parse_row(text.substr(0, slash));
  auto [bot, bflip] = parse_row(text.substr(slash + 1));
  GenPerm perm(top, bot);
  FlipVector flips(static_cast<size_t>(perm.size()), 1);
  for (size_t i = 0; i < top.size(); ++i)
    if (tflip[i]) flips[static_cast<size_t>(perm.alpha_index(top[i]))] = -1;
  // Bottom-row marks must agree letterwise.
  for (size_t i = 0; i < bot.size(); ++i) {
    bool f = flips[static_cast<size_t>(perm.alpha_index(bot[i]))] == -1;
    if (f != bflip[i])
      throw ParseError(std::string("flip mark mismatch between rows at letter ") + bot[i]);
  }
  return {std::move(perm), std::move(flips)};
}

std::string format_combinatorics(const GenPerm& perm, const FlipVector& flips) {
  std::ostringstream os;
  auto row = [&](const std::vector<Letter>& r) {
    for (Letter l : r) {
      os << l;
      if (flips[static_cast<size_t>(perm.alpha_index(l))] == -1) os << '~';
    }
  };
  row(perm.top());
  os << '/';
  row(perm.bot());
  return os.str();
}

FlipIet::FlipIet(GenPerm perm, FlipVector flips, std::vector<FieldElement> lengths)
    : perm_(std::move(perm)), flips_(std::move(flips)), lengths_(std::move(lengths)) {
  size_t n = static_cast<size_t>(perm_.size());
  if (flips_.size() != n || lengths_.size() != n)
    throw AlphabetMismatch("flips/lengths must match the alphabet size");
  spec_ = lengths_[0].spec();
  for (const auto& l : lengths_) {
    if (!l.spec() || l.spec().get() != spec_.get())
      throw FieldMismatch("all lengths must lie in one field");
    if (l.sign() <= 0) throw NonPositiveLength("interval lengths must be positive");
  }
  alpha_top_.reserve(n + 1);
  alpha_bot_.reserve(n + 1);
  FieldElement t = spec_->zero(), b = spec_->zero();
  alpha_top_.push_back(t);
  alpha_bot_.push_back(b);
  for (size_t j = 0; j < n; ++j) {
    t = t + length_of(perm_.top_at(static_cast<int>(j)));
    b = b + length_of(perm_.bot_at(static_cast<int>(j)));
    alpha_top_.push_back(t);
    alpha_bot_.push_back(b);
  }
  total_ = alpha_top_.back();
}

bool FlipIet::fully_flipped() const {
  return std::all_of(flips_.begin(), flips_.end(), [](int8_t k) { return k == -1; });
}

bool FlipIet::has_flip() const {
  return std::any_of(flips_.begin(), flips_.end(), [](int8_t k) { return k == -1; });
}

Letter FlipIet::piece_at(const FieldElement& x) const {
  if (x.sign() < 0 || (x - total_).sign() >= 0) throw OutOfDomain("point outside [0, total)");
  for (int i = 0; i < size(); ++i) {
    if ((x - alpha_top(i + 1)).sign() < 0) return perm_.top_at(i);
  }
  throw OutOfDomain("point outside [0, total)");
}

FieldElement FlipIet::evaluate(const FieldElement& x) const {
  Letter l = piece_at(x);
  if (flip_of(l) == 1) return x - top_start(l) + bot_start(l);
  return top_end(l) + bot_start(l) - x;
}

FieldElement FlipIet::evaluate_inverse(const FieldElement& y) const {
  if (y.sign() < 0 || (y - total_).sign() >= 0) throw OutOfDomain("point outside [0, total)");
  for (int i = 0; i < size(); ++i) {
    if ((y - alpha_bot(i + 1)).sign() < 0) {
      Letter l = perm_.bot_at(i);
      if (flip_of(l) == 1) return y - bot_start(l) + top_start(l);
      return top_end(l) + bot_start(l) - y;
    }
  }
  throw OutOfDomain("point outside [0, total)");
}

FlipIet make_flip_iet(const GenPerm& perm, const FlipVector& flips,
                      const std::vector<FieldElement>& lengths, bool strict_ietf) {
  FlipIet f(perm, flips, lengths);
  if (strict_ietf && !f.has_flip())
    throw AllFlipsTrivial("an IETF requires at least one flipped letter");
  return f;
}

FlipIet make_flip_iet(const std::string& combinatorics,
                      const std::vector<FieldElement>& lengths_in_top_order, bool strict_ietf) {
  auto [perm, flips] = parse_combinatorics(combinatorics);
  if (lengths_in_top_order.size() != static_cast<size_t>(perm.size()))
    throw AlphabetMismatch("length count does not match the alphabet");
  std::vector<FieldElement> by_alpha(lengths_in_top_order.size());
  for (size_t i = 0; i < lengths_in_top_order.size(); ++i) {
    Letter l = perm.top_at(static_cast<int>(i));
    by_alpha[static_cast<size_t>(perm.alpha_index(l))] = lengths_in_top_order[i];
  }
  return make_flip_iet(perm, flips, by_alpha, strict_ietf);
}

}  // namespace flipiet
