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

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flipiet/induction.hpp"

namespace flipiet {

// A vertex of the modified Rauzy graph: combinatorial data (perm, flips).
struct RauzyClass {
  GenPerm perm;
  FlipVector flips;

  bool is_stop() const {
    int n = perm.size();
    return perm.top_at(n - 1) == perm.bot_at(n - 1);
  }
  bool is_reducible() const { return perm.is_reducible(); }

  std::string key() const;  // exact encoding of (perm, flips)
  // Lexicographically minimal relabeling and the bijection h realizing it
  // (canonical = relabel(*this, h)).
  RauzyClass canonical(std::vector<Letter>* h_out = nullptr) const;

  friend bool operator==(const RauzyClass& a, const RauzyClass& b) {
    return a.perm == b.perm && a.flips == b.flips;
  }
};

RauzyClass relabel(const RauzyClass& v, const std::vector<Letter>& h);

struct GraphEdge {
  int src, dst;
  Letter winner, loser;
  Side side;
};

struct BuildOptions {
  size_t vertex_budget = 1000000;
};

class RauzyGraph {
 public:
  const std::vector<RauzyClass>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& out_edges() const { return out_; }
  int seed() const { return 0; }

  // Counts under the different conventions.
  size_t count(bool exclude_stop, bool irreducible_only) const;
  std::vector<int> stop_vertices() const;

  // Strongly connected components (Tarjan); each entry lists vertex indices.
  std::vector<std::vector<int>> sccs() const;
  // A vertex lies on a directed cycle iff its SCC has an internal edge.
  std::vector<bool> on_cycle() const;

  friend RauzyGraph build_component(const RauzyClass& seed, BuildOptions opts);

 private:
  std::vector<RauzyClass> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> out_;  // edge indices per source
};

// Forward BFS closure of the combinatorial induction from the seed, both
// branches per vertex; stop vertices are kept and flagged.
RauzyGraph build_component(const RauzyClass& seed, BuildOptions opts = {});

struct QuotientGraph {
  struct ClassInfo {
    RauzyClass representative;  // canonical form
    std::vector<int> members;   // raw vertex indices
  };
  struct QEdge {
    int src, dst;
    Letter winner, loser;  // labels on the representative of src
    Side side;
    std::vector<Letter> h;  // relabeling from the raw child to dst's representative
    bool identity_h;
  };
  std::vector<ClassInfo> classes;
  std::vector<QEdge> edges;
  std::vector<int> class_of;  // raw vertex -> class index

  size_t count(bool exclude_stop, bool irreducible_only) const;
};

QuotientGraph quotient(const RauzyGraph& g);

// Path-independent propagation of an integer vector along edges,
// w(dst) = A_e^T w(src). On a revisit mismatch the two conflicting paths are
// returned instead.
struct VertexInvariant {
  std::vector<std::vector<Int>> vectors;  // indexed by vertex; empty when unreachable
};
struct InconsistencyWitness {
  int vertex;
  std::vector<int> path_a, path_b;  // edge index sequences from the root
  std::vector<Int> value_a, value_b;
};
using PropagationResult = std::variant<VertexInvariant, InconsistencyWitness>;

PropagationResult propagate_invariant(const RauzyGraph& g, int root, const std::vector<Int>& v);

// Per cycle-bearing SCC, the letters that never win on internal edges.
struct NeverWinning {
  std::vector<int> scc;              // vertex indices
  std::vector<Letter> never_winners;
};
std::vector<NeverWinning> cycles_never_winning_letters(const RauzyGraph& g);

// Vertices equal to the pattern up to relabeling.
std::vector<int> find_pattern_vertices(const RauzyGraph& g, const RauzyClass& pattern);

struct DotOptions {
  bool suppress_stop_vertices = false;
  bool suppress_reducible = false;
};
std::string export_dot(const RauzyGraph& g, DotOptions opts = {});
std::string export_dot(const QuotientGraph& q, DotOptions opts = {});

}  // namespace flipiet
