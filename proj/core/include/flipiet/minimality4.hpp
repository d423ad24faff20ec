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
#include <set>

#include "flipiet/gasket.hpp"
#include "flipiet/rauzy_graph.hpp"

namespace flipiet {

struct MinimalityVerdict {
  enum class Kind { MinimalCandidate, NotMinimal, Inconclusive } verdict;
  bool reachable = false;
  std::vector<int> witness_path;  // edge indices in the cached component
  std::optional<SimplexPoint> gasket_point;
  long gasket_depth = 0;
  bool degenerate_tie = false;
};

struct Cet4Evidence {
  MinimalityCertificate certificate;
  bool residual_checked = false;  // only when the induction kept shrinking
  bool residual_zero = false;     // <lambda, (1,-1,1,-1,-1)> == 0
};

// Minimality test for 4-letter exchanges with flips: reachability of the
// combinatorics (up to relabeling) in the component of A~B~C~D~/B~D~A~C~,
// plus the gasket condition on the lengths pulled back to the component seed.
// Building the checker computes and caches that component.
class Minimality4Checker {
 public:
  Minimality4Checker();

  const RauzyGraph& component() const { return component_; }

  MinimalityVerdict ietf4_minimality(const FlipIet& F, long depth_threshold = 50) const;

  // tau = 1/2 evidence for 4-interval circle maps: when the induction keeps
  // shrinking without a stop, the length combination orthogonal to
  // (1,-1,1,-1,-1) must vanish.
  Cet4Evidence cet4_tau_half_check(const CetMap& F, long max_steps = 100000) const;

 private:
  RauzyGraph component_;
  std::set<std::string> canon_keys_;
  std::vector<int> parent_edge_;  // BFS tree towards the seed
};

}  // namespace flipiet
