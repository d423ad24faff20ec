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

#include <array>
#include <string>
#include <vector>

#include "flipiet/billiard.hpp"

namespace flipiet {

// Exact plane vector over a number field.
struct Vec2 {
  FieldElement x, y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  Vec2 scaled(const FieldElement& c) const { return {x * c, y * c}; }
  friend FieldElement dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
  friend FieldElement cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
  std::array<double, 2> to_double() const { return {x.to_double(), y.to_double()}; }
};

// Exact plane embedding of the base (positively oriented) tile; the tiling is
// spanned by u = B-A and v = C-A.
struct TriangleGeometry {
  Vec2 A, B, C;
  Vec2 circumcenter() const;
};

struct TraceSegment {
  std::array<long, 3> tile;  // (i, j, up ? 1 : 0)
  Vec2 entry, exit;
  char exit_side;
};

// Straight-ray trace with refraction coefficient -1 at every crossed side:
// the direction is reflected across the side's direction each step.
struct GeometricTrace {
  std::vector<TraceSegment> segments;
  bool distance_invariant = true;  // exact: cross(d, O-p)^2 / (d.d) constant
  bool same_side = true;           // circumcenter stays on one side of the ray
  bool no_tile_revisit = true;

  std::string letters() const;
};

GeometricTrace geometric_trace(const TriangleGeometry& geom, const Vec2& start, const Vec2& dir,
                               long steps);

// Exact test instance on the pi/12 angle grid over the grid24 field:
// angles (k1, k2, k3)/12, tau and x0 in 24ths of a turn. The base tile is
// inscribed in the unit circle so that the folded circle map has the given
// tau and starting point x0.
struct GridInstance {
  TriangleGeometry geom;
  Vec2 start, dir;
  CetMap folded;
  FieldElement x0;
};

GridInstance make_grid_instance(const FieldSpec::Ptr& grid24, int k1, int k2, int k3, int tau24,
                                int x24);

// cos/sin of m/24 of a turn as grid24 field elements.
FieldElement grid24_cos(const FieldSpec::Ptr& grid24, int m);
FieldElement grid24_sin(const FieldSpec::Ptr& grid24, int m);

}  // namespace flipiet
