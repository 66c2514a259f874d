// Copyright 2026 The sphtess Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Closed-form bounds for dissected equilateral triangles, the small lower-bound
// constructions for online placement, and the reproduction tables.

#include <optional>
#include <string>
#include <vector>

#include "sphtess/gapmetrics.hpp"
#include "sphtess/sphgeom.hpp"
#include "sphtess/tessellate.hpp"

namespace sphtess::analysis {

// Distance from the centroid of an equilateral triangle with side alpha to its
// vertices, asin(2 sin(alpha/2) / sqrt 3). Requires 0 < alpha < 2 pi / 3.
Radians centroid_distance(Radians alpha);

// Side of the central triangle after one dissection, 2 asin(tan(alpha/2) / 2).
// Requires 0 < alpha <= 2 atan 2.
Radians central_edge_length(Radians alpha);

// Limit of the face-restricted gap ratio under repeated dissection,
// 4 sin(alpha/2) / (alpha sqrt(3 - 4 sin^2(alpha/2))). Requires
// 0 < alpha < 2 pi / 3.
double limit_gap_ratio(Radians alpha);

// Bound for incomplete dissection levels: twice limit_gap_ratio.
double stage2_bound(Radians alpha);

// A small ordered point set together with the reports of each prefix.
struct BoundConstruction {
  std::string name;
  std::vector<UnitVec3> points;
  std::vector<GapReport> prefixes;  // prefixes of 2, 3, ... points
  double claimed_ratio = 0.0;
  Radians x;                        // offset of the second point from the antipode of the first
  std::optional<Radians> z;         // position of the third point along the bisecting great circle

  double max_prefix_ratio() const { return max_ratio(prefixes); }
};

// Three points with both prefix ratios equal to the golden ratio: x = pi (sqrt 5 - 2),
// p1 the north pole, p2 at distance pi - x, p3 the antipode of their midpoint.
BoundConstruction three_point_bound();

// Offset used by the four-point construction, 0.726 pi / 2.726.
Radians four_point_offset();

// Points u1 = (0, 1, 0) and u2 at distance pi - x in the equatorial plane; the
// third point sits on the great circle equidistant from them,
// u3(z) = cos z m + sin z e_z with m the midpoint of u1 and u2; the fourth is
// the center of the largest empty cap of the first three.
std::vector<UnitVec3> four_point_configuration(Radians x, Radians z);

struct Gap34Sample {
  Radians z;
  double gap3 = 0.0;  // ratio of {u1, u2, u3}
  double gap4 = 0.0;  // ratio of {u1, u2, u3, u4}
};

Gap34Sample gap34_at(Radians x, Radians z);

// `samples` evenly spaced values of z over [0, pi]. Requires 0 < x < pi and
// samples >= 10.
std::vector<Gap34Sample> gap34_curve(Radians x, std::size_t samples);

// z in [0, pi] where gap3 and gap4 meet, to 1e-10 by bisection inside the
// coarse bracket with the smallest ratio. Throws RootNotBracketed.
Radians gap34_crossing(Radians x, std::size_t coarse_samples = 200);

// Four points with gap3 = gap4 for the offset four_point_offset().
BoundConstruction four_point_bound();

// Points on one great circle, u1 = (0, 1, 0) and the others at the given
// angles along the circle from u1.
std::vector<UnitVec3> great_circle_points(std::initializer_list<double> angles);

struct CounterexampleReport {
  Radians beta;             // distance of the first two points
  Radians gamma;            // pi beta / (2 pi - beta)
  double claimed_ratio = 0.0;  // pi / gamma
  Radians far_side;         // 2 pi - beta - gamma, the other distance of the third point
  BoundConstruction claimed;       // third point at distance gamma from the second
  BoundConstruction equidistant;   // third point at the far midpoint
  BoundConstruction golden;        // three_point_bound()
};

CounterexampleReport counterexample_178();

struct Table1Row {
  unsigned depth = 0;
  GapReport report;  // face-restricted
};

// One icosahedron face, depths 0..max_depth. Requires max_depth <= 10.
std::vector<Table1Row> table1(unsigned max_depth);

struct Table2Row {
  std::string solid;
  double stage1 = 0.0;            // max prefix ratio over the solid's vertices
  double stage2 = 0.0;            // stage2_bound(edge length)
  std::optional<double> stage2_empirical;  // max prefix ratio past the vertices
  std::size_t empirical_points = 0;
  bool computed = true;           // false for tabulated constants
  bool outside_proven_range = false;  // edge length above pi/2
};

// Tetrahedron, octahedron, icosahedron, then the dodecahedron as tabulated
// constants. The empirical stage-2 scan covers the largest complete level with
// at most `empirical_limit` points; 0 skips it.
std::vector<Table2Row> table2(std::size_t empirical_limit = 0);

std::string table1_csv(const std::vector<Table1Row>& rows);
// Four decimals; distances in degrees when asked.
std::string table1_text(const std::vector<Table1Row>& rows, bool degrees = false);
std::string table2_csv(const std::vector<Table2Row>& rows);
std::string table2_text(const std::vector<Table2Row>& rows);
std::string to_json(const BoundConstruction& c);
std::string to_json(const CounterexampleReport& r);

}  // namespace sphtess::analysis
