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

#include "flipiet/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace flipiet {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string svg_document(const std::vector<std::array<double, 2>>& pts, bool closed) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& p : pts) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  double pad = 0.5 + 0.02 * std::max(max_x - min_x, max_y - min_y);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(min_x - pad) << " "
     << fmt(min_y - pad) << " " << fmt(max_x - min_x + 2 * pad) << " "
     << fmt(max_y - min_y + 2 * pad) << "\">\n";
  os << "  <path fill=\"none\" stroke=\"black\" stroke-width=\""
     << fmt(0.01 * std::max(1.0, std::max(max_x - min_x, max_y - min_y))) << "\" d=\"";
  for (size_t i = 0; i < pts.size(); ++i)
    os << (i == 0 ? "M " : " L ") << fmt(pts[i][0]) << " " << fmt(pts[i][1]);
  if (closed) os << " Z";
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string render_svg(const CombinatorialOrbit& orbit) {
  return svg_document(orbit.plane_points, orbit.closed);
}

std::string render_svg(const GeometricTrace& trace) {
  std::vector<std::array<double, 2>> pts;
  if (!trace.segments.empty()) pts.push_back(trace.segments.front().entry.to_double());
  for (const auto& s : trace.segments) pts.push_back(s.exit.to_double());
  return svg_document(pts, false);
}

}  // namespace flipiet
