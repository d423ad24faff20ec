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

#include "flipiet/poincare.hpp"

namespace flipiet {

namespace {

// Restriction to row positions [from, to); valid when both rows carry the
// same letter set there (prefix blocks of reducible maps, or both rows minus
// a shared last letter).
FlipIet sub_map(const FlipIet& F, int from, int to) {
  std::vector<Letter> top(F.perm().top().begin() + from, F.perm().top().begin() + to);
  std::vector<Letter> bot(F.perm().bot().begin() + from, F.perm().bot().begin() + to);
  GenPerm perm(std::move(top), std::move(bot));
  FlipVector flips(static_cast<size_t>(perm.size()));
  std::vector<FieldElement> lengths(static_cast<size_t>(perm.size()));
  for (Letter l : perm.alphabet()) {
    size_t i = static_cast<size_t>(perm.alpha_index(l));
    flips[i] = static_cast<int8_t>(F.flip_of(l));
    lengths[i] = F.length_of(l);
  }
  return FlipIet(std::move(perm), std::move(flips), std::move(lengths));
}

struct Builder {
  PoincareRauzySection out;
  PoincareOptions opts;

  std::optional<PoincareFailure> process(const FlipIet& G, const FieldElement& offset,
                                         int stage) {
    if (stage > opts.max_stages)
      return PoincareFailure{PoincareFailure::Reason::RecursionBudgetExceeded, std::nullopt,
                             offset, stage};

    if (auto dec = is_simple(G.perm(), G.flips())) {
      out.finals.push_back({offset, G, std::move(*dec), stage});
      return std::nullopt;
    }
    if (auto cut = G.perm().reducible_at()) {
      FlipIet left = sub_map(G, 0, *cut);
      FlipIet right = sub_map(G, *cut, G.size());
      if (auto f = process(left, offset, stage)) return f;
      return process(right, offset + G.alpha_top(*cut), stage);
    }
    if (!G.has_flip())
      return PoincareFailure{PoincareFailure::Reason::NonSimpleTerminal, G, offset, stage};

    FlipIet cur = G;
    bool stopped = false;
    for (long m = 0; m < opts.step_budget; ++m) {
      StepResult r = step(cur);
      if (r.stopped) {
        stopped = true;
        break;
      }
      cur = std::move(*r.next);
    }
    if (!stopped)
      return PoincareFailure{PoincareFailure::Reason::RecursionBudgetExceeded, cur, offset,
                             stage};

    // Peel the terminal self-mapped interval J. A stop with distinct end
    // letters is an exact length tie; the terminal interval is not invariant
    // then and the recursion gives up.
    int n = cur.size();
    if (n >= 2 && cur.perm().top_at(n - 1) != cur.perm().bot_at(n - 1))
      return PoincareFailure{PoincareFailure::Reason::DegenerateTie, cur, offset, stage};
    Letter last = cur.perm().top_at(n - 1);
    out.periodic_pieces.push_back({offset + cur.alpha_top(n - 1), cur.length_of(last), last,
                                   cur.flip_of(last) == -1, stage});
    if (n == 1) return std::nullopt;
    return process(sub_map(cur, 0, n - 1), offset, stage + 1);
  }
};

}  // namespace

PoincareResult poincare_rauzy(const FlipIet& F, PoincareOptions opts) {
  Builder b{.out = {}, .opts = opts};
  if (auto failure = b.process(F, F.spec()->zero(), 0)) return *failure;
  return std::move(b.out);
}

IntegrabilityVerdict is_integrable(const FlipIet& F, PoincareOptions opts) {
  PoincareResult r = poincare_rauzy(F, opts);
  if (std::holds_alternative<PoincareRauzySection>(r))
    return {IntegrabilityVerdict::Kind::Integrable, std::move(r)};
  const auto& f = std::get<PoincareFailure>(r);
  if (f.reason == PoincareFailure::Reason::NonSimpleTerminal)
    return {IntegrabilityVerdict::Kind::NotIntegrable, std::move(r)};
  // Budget exhaustion and degenerate ties both leave the question open.
  return {IntegrabilityVerdict::Kind::Inconclusive, std::move(r)};
}

bool periodic_intervals_flipped(const PoincareRauzySection& section) {
  for (const auto& p : section.periodic_pieces)
    if (!p.flipped) return false;
  for (const auto& part : section.finals) {
    for (const auto& block : part.decomposition.blocks) {
      if (block.kind != SimpleBlock::Kind::PeriodicCylinder) continue;
      for (Letter l : block.top_word)
        if (part.map.flip_of(l) != -1) return false;
    }
  }
  return true;
}

}  // namespace flipiet
