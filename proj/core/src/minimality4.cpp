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

#include "flipiet/minimality4.hpp"

#include <algorithm>
#include <deque>

namespace flipiet {

Minimality4Checker::Minimality4Checker() {
  auto [perm, flips] = parse_combinatorics("A~B~C~D~/B~D~A~C~");
  component_ = build_component({std::move(perm), std::move(flips)});
  for (const auto& v : component_.vertices()) canon_keys_.insert(v.canonical().key());
  // BFS tree for path reconstruction.
  parent_edge_.assign(component_.vertices().size(), -1);
  std::deque<int> queue{0};
  std::vector<bool> seen(component_.vertices().size(), false);
  seen[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int ei : component_.out_edges()[static_cast<size_t>(v)]) {
      int w = component_.edges()[static_cast<size_t>(ei)].dst;
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = true;
      parent_edge_[static_cast<size_t>(w)] = ei;
      queue.push_back(w);
    }
  }
}

MinimalityVerdict Minimality4Checker::ietf4_minimality(const FlipIet& F,
                                                       long depth_threshold) const {
  if (F.size() != 4) throw Error("ietf4_minimality needs a 4-letter map");
  MinimalityVerdict out{MinimalityVerdict::Kind::NotMinimal, false, {}, std::nullopt, 0, false};

  std::vector<Letter> h_f;
  RauzyClass cls{F.perm(), F.flips()};
  RauzyClass canon = cls.canonical(&h_f);
  if (!canon_keys_.count(canon.key())) return out;
  out.reachable = true;

  // Locate a component member of the class and express F's lengths in its
  // labeling: relabel(cls, h_f) == canon == relabel(v, h_v) means the letter
  // x of v carries the length of h_f^{-1}(h_v(x)).
  int vi = -1;
  std::vector<Letter> h_v;
  for (size_t i = 0; i < component_.vertices().size(); ++i) {
    std::vector<Letter> h;
    if (component_.vertices()[i].canonical(&h).key() == canon.key()) {
      vi = static_cast<int>(i);
      h_v = h;
      break;
    }
  }
  const RauzyClass& v = component_.vertices()[static_cast<size_t>(vi)];
  const auto& alpha_f = F.perm().alphabet();
  const auto& alpha_v = v.perm.alphabet();
  std::vector<FieldElement> lambda_v(alpha_v.size());
  for (size_t i = 0; i < alpha_v.size(); ++i) {
    Letter image = h_v[i];  // letter of the canonical form fed by v's letter alpha_v[i]
    // find F's letter mapping to the same canonical letter
    size_t j = 0;
    while (j < alpha_f.size() && h_f[j] != image) ++j;
    lambda_v[i] = F.lengths()[j];
  }

  // Pull the lengths back to the seed along the BFS tree path.
  std::vector<int> path;
  for (int cur = vi; parent_edge_[static_cast<size_t>(cur)] >= 0;) {
    int ei = parent_edge_[static_cast<size_t>(cur)];
    path.push_back(ei);
    cur = component_.edges()[static_cast<size_t>(ei)].src;
  }
  std::reverse(path.begin(), path.end());
  out.witness_path = path;
  std::vector<FieldElement> lambda = lambda_v;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const GraphEdge& e = component_.edges()[static_cast<size_t>(*it)];
    const GenPerm& p = component_.vertices()[static_cast<size_t>(e.src)].perm;
    // lambda_src = A_e lambda_dst: the winner's length regrows by the loser's.
    int w = p.alpha_index(e.winner), l = p.alpha_index(e.loser);
    lambda[static_cast<size_t>(w)] = lambda[static_cast<size_t>(w)] + lambda[static_cast<size_t>(l)];
  }

  // Length condition at the seed labeling (A, B, C, D in alphabet order).
  FieldElement a = lambda[0], b = lambda[1], c = lambda[2], d = lambda[3];
  FieldElement total = a + b + c + d;
  FieldElement g1 = (b + c + d - a) / total;
  FieldElement g2 = (a - b - c + d) / total;
  FieldElement g3 = (a + b + c - d) / total;
  if (g1.sign() <= 0 || g2.sign() <= 0 || g3.sign() <= 0) {
    out.verdict = MinimalityVerdict::Kind::NotMinimal;
    return out;
  }
  out.gasket_point = SimplexPoint{g1, g2, g3};
  GasketDepth gd = gasket_depth(*out.gasket_point, depth_threshold);
  out.gasket_depth = gd.depth;
  out.degenerate_tie = gd.hit_degenerate;
  out.verdict = gd.depth >= depth_threshold ? MinimalityVerdict::Kind::MinimalCandidate
                                            : MinimalityVerdict::Kind::NotMinimal;
  return out;
}

Cet4Evidence Minimality4Checker::cet4_tau_half_check(const CetMap& F, long max_steps) const {
  if (F.n() != 4) throw Error("cet4_tau_half_check needs a 4-interval circle map");
  FlipIet cut = cet_to_ietf(F);
  Cet4Evidence ev{minimality_certificate(cut, max_steps, make_rational(1, 1000)), false, false};
  if (ev.certificate.kind != MinimalityCertificate::Kind::ShrinkingNoStop) return ev;
  if (cut.size() != 5) return ev;
  static const int vperp[5] = {1, -1, 1, -1, -1};
  FieldElement res = cut.spec()->zero();
  for (int i = 0; i < 5; ++i)
    res = res + cut.lengths()[static_cast<size_t>(i)] * Rational(vperp[i]);
  ev.residual_checked = true;
  ev.residual_zero = res.sign() == 0;
  return ev;
}

}  // namespace flipiet
