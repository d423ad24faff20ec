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

#include "flipiet/billiard.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace flipiet {

TriangleShape TriangleShape::make(FieldElement l1, FieldElement l2, FieldElement l3) {
  if (l1.sign() <= 0 || l2.sign() <= 0 || l3.sign() <= 0)
    throw NonPositiveLength("angles must be positive");
  if (!((l1 + l2 + l3) == l1.spec()->one()))
    throw AngleSumNotOne("normalized angles must sum to 1");
  return {std::move(l1), std::move(l2), std::move(l3)};
}

bool TriangleShape::acute() const {
  Rational half = make_rational(1, 2);
  return (l1 - half).sign() < 0 && (l2 - half).sign() < 0 && (l3 - half).sign() < 0;
}

bool TriangleShape::obtuse() const {
  Rational half = make_rational(1, 2);
  return (l1 - half).sign() > 0 || (l2 - half).sign() > 0 || (l3 - half).sign() > 0;
}

std::array<std::array<double, 2>, 3> TriangleShape::vertices() const {
  const double tau_b = 2.0 * M_PI * l3.to_double();
  const double tau_c = 2.0 * M_PI * (l3.to_double() + l1.to_double());
  return {{{1.0, 0.0}, {std::cos(tau_b), std::sin(tau_b)}, {std::cos(tau_c), std::sin(tau_c)}}};
}

std::array<double, 2> TriangleShape::lattice_u() const {
  auto v = vertices();
  return {v[1][0] - v[0][0], v[1][1] - v[0][1]};
}

std::array<double, 2> TriangleShape::lattice_v() const {
  auto v = vertices();
  return {v[2][0] - v[0][0], v[2][1] - v[0][1]};
}

SymbolicWord symbolic_orbit(const CetMap& F, const FieldElement& x0, long steps) {
  SymbolicWord w;
  FieldElement x = x0;
  for (long k = 0; k < steps; ++k) {
    if (F.is_singular(x)) {
      w.singular_hit = true;
      w.singular_step = k;
      return w;
    }
    w.letters.push_back(static_cast<char>('a' + F.interval_of(x)));
    x = F.evaluate(x);
  }
  return w;
}

bool triangle_valid_x0(const CetMap& F, const FieldElement& x0) {
  if (F.n() != 3) throw Error("validity test is for 3-interval circle maps");
  const auto spec = F.spec();
  FieldElement half = spec->from_rational(make_rational(1, 2));
  const FieldElement& l1 = F.lengths()[0];
  const FieldElement& l3 = F.lengths()[2];
  FieldElement X = (half + F.tau() - l3 - x0).mod1();
  FieldElement pos[3] = {X, (X + l3).mod1(), (X + l3 + l1).mod1()};
  int in_first = 0, in_second = 0;
  for (const auto& p : pos) {
    if (p.sign() == 0 || (p - F.tau()).sign() == 0) return false;  // chord through a vertex
    if (p.sign() > 0 && (p - F.tau()).sign() < 0)
      ++in_first;
    else
      ++in_second;
  }
  return in_first > 0 && in_second > 0;
}

namespace {

// Tile bookkeeping on the abstract tiling lattice. Triangles: (i, j, up).
// Crossing the side with a given letter moves to the determined neighbor.
struct TriangleTile {
  long i = 0, j = 0;
  bool up = true;
  bool operator==(const TriangleTile&) const = default;

  void cross(char side) {
    if (up) {
      switch (side) {
        case 'a': up = false; return;
        case 'b': --i; up = false; return;
        case 'c': --j; up = false; return;
      }
    } else {
      switch (side) {
        case 'a': up = true; return;
        case 'b': ++i; up = true; return;
        case 'c': ++j; up = true; return;
      }
    }
    throw Error("bad side letter");
  }
};

// Quadrilaterals: parity plus the accumulated point-reflection translation,
// reduced to the lattice of the two diagonals.
struct QuadTile {
  int parity = 0;
  std::array<long, 4> w{0, 0, 0, 0};  // formal (A, B, C, D) coordinates

  bool operator==(const QuadTile&) const = default;

  void cross(char side) {
    static const int pair[4][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};  // a=AB, b=BC, c=CD, d=DA
    int idx = side - 'a';
    int s = parity == 0 ? 1 : -1;
    w[static_cast<size_t>(pair[idx][0])] += s;
    w[static_cast<size_t>(pair[idx][1])] += s;
    parity ^= 1;
  }

  // (m, n) with translation = m (B-D) + n (C-A), plus the A+B residue on odd
  // parity.
  std::array<long, 2> reduced() const {
    long m, n;
    if (parity == 0) {
      m = w[1];
      n = w[2];
      if (w[3] != -m || w[0] != -n) throw Error("quad tile bookkeeping out of lattice");
    } else {
      m = w[1] - 1;
      n = w[2];
      if (w[3] != -m || w[0] != 1 - n) throw Error("quad tile bookkeeping out of lattice");
    }
    return {m, n};
  }
};

struct TileState {
  int n;
  TriangleTile tri;
  QuadTile quad;

  explicit TileState(int n_) : n(n_) {}
  void cross(char side) {
    if (n == 3)
      tri.cross(side);
    else
      quad.cross(side);
  }
  bool same_parity(const TileState& o) const {
    return n == 3 ? tri.up == o.tri.up : quad.parity == o.quad.parity;
  }
  bool operator==(const TileState& o) const {
    return n == 3 ? tri == o.tri : (quad.parity == o.quad.parity && quad.reduced() == o.quad.reduced());
  }
  std::array<long, 2> delta(const TileState& start) const {
    if (n == 3) return {tri.i - start.tri.i, tri.j - start.tri.j};
    auto a = quad.reduced(), b = start.quad.reduced();
    return {a[0] - b[0], a[1] - b[1]};
  }
};

std::string prefix_of(const std::string& s, size_t n = 64) { return s.substr(0, n); }

}  // namespace

TrajectoryClass classify(const CetMap& F, const FieldElement& x0, ClassifyBudgets budgets) {
  if (F.n() != 3 && F.n() != 4) throw Error("classification supports 3- and 4-interval maps");
  std::string letters;
  TileState tile(F.n());
  const TileState start = tile;
  FieldElement x = x0;
  for (long k = 0; k < budgets.orbit_steps; ++k) {
    if (F.is_singular(x)) return OrbitInconclusive{true, k, prefix_of(letters)};
    char c = static_cast<char>('a' + F.interval_of(x));
    letters.push_back(c);
    tile.cross(c);
    x = F.evaluate(x);
    if (x == x0) {
      long period = k + 1;
      if (!tile.same_parity(start)) {
        // Odd return period: the geometric period doubles and the word
        // repeats.
        for (char c2 : letters) tile.cross(c2);
        period *= 2;
        letters += letters;
      }
      if (tile == start) return Closed{period, letters};
      return DriftPeriodic{period, tile.delta(start), letters};
    }
  }

  // No exact return: decide between escape flavors via the induction on the
  // cut interval map.
  MinimalityCertificate cert =
      minimality_certificate(cet_to_ietf(F), budgets.induction_steps, make_rational(1, 1000));
  if (cert.kind == MinimalityCertificate::Kind::StoppedAt)
    return LinearEscape{cert.steps, prefix_of(letters)};
  if (F.n() == 3) {
    FieldElement half = F.spec()->from_rational(make_rational(1, 2));
    if (F.tau() == half) {
      try {
        SimplexPoint p = triangle_gasket_point(F.lengths()[0], F.lengths()[1], F.lengths()[2]);
        GasketDepth gd = gasket_depth(p, budgets.gasket_depth_threshold);
        if (gd.depth >= budgets.gasket_depth_threshold)
          return NonlinearEscapeCandidate{gd.depth, cert.max_len, prefix_of(letters)};
      } catch (const NotAcute&) {
      }
    }
  }
  return OrbitInconclusive{false, budgets.orbit_steps, prefix_of(letters)};
}

namespace {

// Lattice coordinates of the vertex labels in the basis (AB, AC).
std::array<long, 2> vertex_coord(char capital) {
  switch (capital) {
    case 'a': return {0, 0};
    case 'b': return {1, 0};
    case 'c': return {0, 1};
  }
  throw Error("combinatorial orbits are for triangle words");
}

std::array<long, 2> pair_vector(char w0, char w1) {
  auto p = vertex_coord(w0), q = vertex_coord(w1);
  return {q[0] - p[0], q[1] - p[1]};
}

}  // namespace

CombinatorialOrbit combinatorial_orbit(const std::string& word, const TriangleShape& shape) {
  if (word.size() < 2) throw Error("combinatorial orbit needs at least two letters");
  CombinatorialOrbit orbit;
  std::array<long, 2> acc{0, 0};
  orbit.lattice_points.push_back(acc);
  for (size_t j = 0; j + 1 < word.size(); j += 2) {
    auto v = pair_vector(word[j], word[j + 1]);
    acc = {acc[0] + v[0], acc[1] + v[1]};
    orbit.lattice_points.push_back(acc);
  }
  orbit.closed = orbit.lattice_points.front() == orbit.lattice_points.back() &&
                 orbit.lattice_points.size() > 1;
  auto u = shape.lattice_u(), v = shape.lattice_v();
  for (const auto& p : orbit.lattice_points)
    orbit.plane_points.push_back(
        {static_cast<double>(p[0]) * u[0] + static_cast<double>(p[1]) * v[0],
         static_cast<double>(p[0]) * u[1] + static_cast<double>(p[1]) * v[1]});
  return orbit;
}

std::vector<DisplacementPoint> displacement_growth(const std::string& word,
                                                   const TriangleShape& shape,
                                                   const std::vector<long>& checkpoints) {
  auto u = shape.lattice_u(), v = shape.lattice_v();
  std::vector<DisplacementPoint> out;
  std::array<long, 2> acc{0, 0};
  size_t next = 0;
  std::vector<long> cps = checkpoints;
  std::sort(cps.begin(), cps.end());
  for (long n = 1; n + 1 <= static_cast<long>(word.size()) && next < cps.size(); ++n) {
    auto d = pair_vector(word[static_cast<size_t>(n - 1)], word[static_cast<size_t>(n)]);
    acc = {acc[0] + d[0], acc[1] + d[1]};
    if (n == cps[next]) {
      double px = static_cast<double>(acc[0]) * u[0] + static_cast<double>(acc[1]) * v[0];
      double py = static_cast<double>(acc[0]) * u[1] + static_cast<double>(acc[1]) * v[1];
      out.push_back({n, acc, std::hypot(px, py) / static_cast<double>(n)});
      ++next;
    }
  }
  return out;
}

namespace {

using LPoint = std::array<long, 2>;

// Doubled coordinates of the midpoint of the side crossed from a tile.
LPoint side_midpoint2(const TriangleTile& t, char side) {
  if (t.up) {
    switch (side) {
      case 'a': return {2 * t.i + 1, 2 * t.j + 1};
      case 'b': return {2 * t.i, 2 * t.j + 1};
      case 'c': return {2 * t.i + 1, 2 * t.j};
    }
  } else {
    switch (side) {
      case 'a': return {2 * t.i + 1, 2 * t.j + 1};
      case 'b': return {2 * t.i + 2, 2 * t.j + 1};
      case 'c': return {2 * t.i + 1, 2 * t.j + 2};
    }
  }
  throw Error("bad side letter");
}

std::pair<LPoint, LPoint> side_endpoints(const TriangleTile& t, char side) {
  if (t.up) {
    switch (side) {
      case 'a': return {{t.i + 1, t.j}, {t.i, t.j + 1}};
      case 'b': return {{t.i, t.j}, {t.i, t.j + 1}};
      case 'c': return {{t.i, t.j}, {t.i + 1, t.j}};
    }
  } else {
    switch (side) {
      case 'a': return {{t.i + 1, t.j}, {t.i, t.j + 1}};
      case 'b': return {{t.i + 1, t.j}, {t.i + 1, t.j + 1}};
      case 'c': return {{t.i, t.j + 1}, {t.i + 1, t.j + 1}};
    }
  }
  throw Error("bad side letter");
}

int winding_number(const std::vector<LPoint>& poly, const LPoint& p) {
  int wn = 0;
  for (size_t k = 0; k < poly.size(); ++k) {
    const LPoint& a = poly[k];
    const LPoint& b = poly[(k + 1) % poly.size()];
    long cross = (b[0] - a[0]) * (p[1] - a[1]) - (p[0] - a[0]) * (b[1] - a[1]);
    if (a[1] <= p[1]) {
      if (b[1] > p[1] && cross > 0) ++wn;
    } else {
      if (b[1] <= p[1] && cross < 0) --wn;
    }
  }
  return wn;
}

}  // namespace

TreeReport tree_check(const std::string& closed_word) {
  TriangleTile tile;
  std::vector<LPoint> midpoints;
  std::set<std::pair<LPoint, LPoint>> crossed;
  for (char c : closed_word) {
    midpoints.push_back(side_midpoint2(tile, c));
    auto [p, q] = side_endpoints(tile, c);
    crossed.insert(p < q ? std::make_pair(p, q) : std::make_pair(q, p));
    tile.cross(c);
  }
  if (!(tile == TriangleTile{}))
    throw Error("tree check needs the word of one geometric period of a closed orbit");

  long min_i = 0, max_i = 0, min_j = 0, max_j = 0;
  for (const auto& m : midpoints) {
    min_i = std::min(min_i, m[0] / 2 - 1);
    max_i = std::max(max_i, m[0] / 2 + 1);
    min_j = std::min(min_j, m[1] / 2 - 1);
    max_j = std::max(max_j, m[1] / 2 + 1);
  }

  std::set<LPoint> inside;
  for (long i = min_i; i <= max_i; ++i)
    for (long j = min_j; j <= max_j; ++j)
      if (winding_number(midpoints, LPoint{2 * i, 2 * j}) != 0) inside.insert({i, j});

  // Uncrossed lattice edges with both endpoints inside.
  std::vector<std::pair<LPoint, LPoint>> edges;
  auto try_edge = [&](LPoint p, LPoint q) {
    if (!inside.count(p) || !inside.count(q)) return;
    auto key = p < q ? std::make_pair(p, q) : std::make_pair(q, p);
    if (crossed.count(key)) return;
    edges.push_back(key);
  };
  for (const auto& p : inside) {
    try_edge(p, {p[0] + 1, p[1]});
    try_edge(p, {p[0], p[1] + 1});
    try_edge({p[0] + 1, p[1]}, {p[0], p[1] + 1});
  }

  // Union-find for connectivity and cycle detection.
  std::map<LPoint, LPoint> parent;
  for (const auto& p : inside) parent[p] = p;
  std::function<LPoint(LPoint)> find = [&](LPoint p) {
    while (parent[p] != p) {
      parent[p] = parent[parent[p]];
      p = parent[p];
    }
    return p;
  };
  bool acyclic = true;
  for (const auto& [p, q] : edges) {
    LPoint rp = find(p), rq = find(q);
    if (rp == rq) {
      acyclic = false;
      continue;
    }
    parent[rp] = rq;
  }
  long components = 0;
  for (const auto& p : inside)
    if (find(p) == p) ++components;

  TreeReport rep;
  rep.vertices = static_cast<long>(inside.size());
  rep.edges = static_cast<long>(edges.size());
  rep.connected = inside.empty() || components == 1;
  rep.acyclic = acyclic;
  rep.is_tree = rep.connected && rep.acyclic;
  return rep;
}

std::optional<SturmianReport> sturmian_factorization(const std::string& word) {
  std::string alphabet(word);
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  for (char c : alphabet) {
    std::vector<std::string> returns;
    std::vector<size_t> occ;
    for (size_t i = 0; i < word.size(); ++i)
      if (word[i] == c) occ.push_back(i);
    if (occ.size() < 3) continue;
    std::set<std::string> distinct;
    std::vector<int> seq;
    std::string w1, w2;
    for (size_t k = 0; k + 1 < occ.size(); ++k) {
      std::string r = word.substr(occ[k], occ[k + 1] - occ[k]);
      distinct.insert(r);
      if (distinct.size() > 2) break;
    }
    if (distinct.size() != 2) continue;
    auto it = distinct.begin();
    w1 = *it++;
    w2 = *it;
    for (size_t k = 0; k + 1 < occ.size(); ++k)
      seq.push_back(word.substr(occ[k], occ[k + 1] - occ[k]) == w1 ? 1 : 0);
    bool balanced = true;
    for (size_t win = 2; win <= std::min<size_t>(seq.size(), 50) && balanced; ++win) {
      int lo = static_cast<int>(win), hi = 0;
      for (size_t s = 0; s + win <= seq.size(); ++s) {
        int count = 0;
        for (size_t t = 0; t < win; ++t) count += seq[s + t];
        lo = std::min(lo, count);
        hi = std::max(hi, count);
      }
      if (hi - lo > 1) balanced = false;
    }
    return SturmianReport{c, w1, w2, balanced};
  }
  return std::nullopt;
}

}  // namespace flipiet
