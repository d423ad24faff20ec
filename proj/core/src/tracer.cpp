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

#include "flipiet/tracer.hpp"

#include <set>

namespace flipiet {

Vec2 TriangleGeometry::circumcenter() const {
  // Perpendicular bisector intersection, solved in closed form.
  Vec2 ab = B - A, ac = C - A;
  FieldElement d = cross(ab, ac) * Rational(2);
  FieldElement ab2 = dot(ab, ab), ac2 = dot(ac, ac);
  FieldElement ux = (ac.y * ab2 - ab.y * ac2) / d;
  FieldElement uy = (ab.x * ac2 - ac.x * ab2) / d;
  return {A.x + ux, A.y + uy};
}

namespace {

struct Tile {
  long i = 0, j = 0;
  bool up = true;
};

struct TileGeom {
  Vec2 va, vb, vc;  // labeled vertices of the tile
};

TileGeom tile_geometry(const TriangleGeometry& g, const Tile& t) {
  Vec2 u = g.B - g.A, v = g.C - g.A;
  Vec2 L = g.A + u.scaled(u.x.spec()->from_int(t.i)) + v.scaled(v.x.spec()->from_int(t.j));
  if (t.up) return {L, L + u, L + v};
  return {L + u + v, L + v, L + u};
}

Vec2 tile_circumcenter(const TriangleGeometry& g, const Vec2& base_center, const Tile& t) {
  Vec2 u = g.B - g.A, v = g.C - g.A;
  Vec2 up_center =
      base_center + u.scaled(u.x.spec()->from_int(t.i)) + v.scaled(v.x.spec()->from_int(t.j));
  if (t.up) return up_center;
  Vec2 L = g.A + u.scaled(u.x.spec()->from_int(t.i)) + v.scaled(v.x.spec()->from_int(t.j));
  Vec2 m2 = L + L + u + v;  // 2M for the shared diagonal side
  return m2 - up_center;
}

void side_of(const TileGeom& tg, char side, Vec2* q1, Vec2* q2) {
  switch (side) {
    case 'a': *q1 = tg.vb; *q2 = tg.vc; return;
    case 'b': *q1 = tg.vc; *q2 = tg.va; return;
    case 'c': *q1 = tg.va; *q2 = tg.vb; return;
  }
  throw Error("bad side letter");
}

Tile neighbor(const Tile& t, char side) {
  Tile n = t;
  if (t.up) {
    n.up = false;
    if (side == 'b') --n.i;
    if (side == 'c') --n.j;
  } else {
    n.up = true;
    if (side == 'b') ++n.i;
    if (side == 'c') ++n.j;
  }
  return n;
}

}  // namespace

std::string GeometricTrace::letters() const {
  std::string s;
  s.reserve(segments.size());
  for (const auto& seg : segments) s.push_back(seg.exit_side);
  return s;
}

GeometricTrace geometric_trace(const TriangleGeometry& geom, const Vec2& start, const Vec2& dir,
                               long steps) {
  GeometricTrace trace;
  Vec2 base_center = geom.circumcenter();

  Tile tile;
  Vec2 p = start, d = dir;
  char entry_side = 0;
  std::set<std::tuple<long, long, bool>> visited;

  FieldElement inv_value = d.x.spec()->zero();  // cross(d, O-p)^2 * normalizer
  int inv_sign = 0;
  bool have_inv = false;
  FieldElement base_d2 = d.x.spec()->one();

  for (long k = 0; k < steps; ++k) {
    if (!visited.insert({tile.i, tile.j, tile.up}).second) trace.no_tile_revisit = false;
    TileGeom tg = tile_geometry(geom, tile);
    Vec2 center = tile_circumcenter(geom, base_center, tile);

    // Signed invariant: cross(d, O - p) / |d|; compare squares exactly and
    // signs separately.
    FieldElement cr = cross(d, center - p);
    FieldElement d2 = dot(d, d);
    if (!have_inv) {
      inv_value = cr * cr;
      base_d2 = d2;
      inv_sign = cr.sign();
      have_inv = true;
    } else {
      if (!(inv_value * d2 == cr * cr * base_d2)) trace.distance_invariant = false;
      if (cr.sign() != inv_sign) trace.same_side = false;
    }

    // Exit side: from inside the tile the forward ray crosses exactly one
    // side interior (a vertex crossing is singular).
    char best_side = 0;
    Vec2 exit_point;
    for (char side : {'a', 'b', 'c'}) {
      if (side == entry_side) continue;
      Vec2 q1, q2;
      side_of(tg, side, &q1, &q2);
      Vec2 e = q2 - q1;
      FieldElement den = cross(d, e);
      if (den.sign() == 0) continue;  // parallel
      FieldElement t_num = cross(q1 - p, e);
      if ((t_num * den).sign() <= 0) continue;  // behind the ray
      FieldElement s_val_num = cross(q1 - p, d) * den;  // s * den^2
      FieldElement den2 = den * den;
      if (s_val_num.sign() < 0 || (s_val_num - den2).sign() > 0) continue;  // misses the side
      if (s_val_num.sign() == 0 || (s_val_num - den2).sign() == 0)
        throw VertexHit("trajectory through a tiling vertex");
      if (best_side != 0) throw Error("ray crosses two side interiors; inconsistent state");
      best_side = side;
      exit_point = p + d.scaled(t_num / den);
    }
    if (best_side == 0) throw Error("ray found no exit side; start outside the tile?");

    trace.segments.push_back({{tile.i, tile.j, tile.up ? 1L : 0L}, p, exit_point, best_side});

    // Negative refraction: reflect the direction across the crossed side.
    Vec2 q1, q2;
    side_of(tg, best_side, &q1, &q2);
    Vec2 e = q2 - q1;
    FieldElement e2 = dot(e, e);
    FieldElement de = dot(d, e);
    Vec2 nd = e.scaled(de + de) - d.scaled(e2);
    d = {nd.x / e2, nd.y / e2};

    p = exit_point;
    tile = neighbor(tile, best_side);
    entry_side = best_side;
  }
  return trace;
}

FieldElement grid24_cos(const FieldSpec::Ptr& f, int m) {
  m = ((m % 24) + 24) % 24;
  // Basis constants in Q(sqrt2 + sqrt3), t the generator.
  auto elem = [&](long c0, long c1, long c2, long c3, long den) {
    return f->element({make_rational(c0, den), make_rational(c1, den), make_rational(c2, den),
                       make_rational(c3, den)});
  };
  FieldElement zero = f->zero(), one = f->one();
  FieldElement half = f->from_rational(make_rational(1, 2));
  FieldElement s2h = elem(0, -9, 0, 1, 4);    // sqrt2 / 2
  FieldElement s3h = elem(0, 11, 0, -1, 4);   // sqrt3 / 2
  FieldElement c15 = elem(-5, -9, 1, 1, 8);   // (sqrt6 + sqrt2)/4
  FieldElement s15 = elem(-5, 9, 1, -1, 8);   // (sqrt6 - sqrt2)/4
  const FieldElement table[7] = {one, c15, s3h, s2h, half, s15, zero};  // cos(0..90 deg by 15)
  int q = m % 6;
  switch (m / 6) {
    case 0: return table[q];
    case 1: return -table[6 - q];
    case 2: return -table[q];
    default: return table[6 - q];
  }
}

FieldElement grid24_sin(const FieldSpec::Ptr& f, int m) { return grid24_cos(f, m - 6); }

GridInstance make_grid_instance(const FieldSpec::Ptr& f, int k1, int k2, int k3, int tau24,
                                int x24) {
  if (k1 + k2 + k3 != 12 || k1 <= 0 || k2 <= 0 || k3 <= 0)
    throw AngleSumNotOne("grid angles must be positive twelfths summing to 12");
  GridInstance inst;
  FieldElement l1 = f->from_rational(make_rational(k1, 12));
  FieldElement l2 = f->from_rational(make_rational(k2, 12));
  FieldElement l3 = f->from_rational(make_rational(k3, 12));
  FieldElement tau = f->from_rational(make_rational(tau24, 24));
  inst.folded = triangle_to_cet3(l1, l2, l3, tau);
  inst.x0 = f->from_rational(make_rational(x24, 24));
  if (!triangle_valid_x0(inst.folded, inst.x0))
    throw Error("x0 does not correspond to a trajectory for this grid instance");

  // Vertex A at position X0 = 1/2 + tau - l3 - x0 (in turns), B and C at
  // counterclockwise arcs l3 and l1 further; chord from position tau to 0.
  int X24 = ((12 + tau24 - 2 * k3 - x24) % 24 + 24) % 24;
  auto pos = [&](int m) { return Vec2{grid24_cos(f, m), grid24_sin(f, m)}; };
  inst.geom.A = pos(X24);
  inst.geom.B = pos(X24 + 2 * k3);
  inst.geom.C = pos(X24 + 2 * k3 + 2 * k1);
  Vec2 entry = pos(tau24), exit = pos(0);
  inst.dir = exit - entry;

  // Start strictly inside the base tile: midpoint of the chord's crossing
  // segment with the tile.
  std::vector<FieldElement> params;  // t along entry + t*(exit-entry)
  const Vec2 verts[3] = {inst.geom.A, inst.geom.B, inst.geom.C};
  for (int s = 0; s < 3; ++s) {
    Vec2 q1 = verts[s], q2 = verts[(s + 1) % 3];
    Vec2 e = q2 - q1;
    FieldElement den = cross(inst.dir, e);
    if (den.sign() == 0) continue;
    FieldElement t = cross(q1 - entry, e) / den;
    FieldElement u = cross(q1 - entry, inst.dir) / den;
    if (u.sign() > 0 && (u - f->one()).sign() < 0 && t.sign() > 0 &&
        (t - f->one()).sign() < 0)
      params.push_back(t);
  }
  if (params.size() != 2)
    throw Error("chord does not cross the base tile cleanly for this grid instance");
  FieldElement mid = (params[0] + params[1]) / Rational(2);
  inst.start = entry + inst.dir.scaled(mid);
  return inst;
}

}  // namespace flipiet
