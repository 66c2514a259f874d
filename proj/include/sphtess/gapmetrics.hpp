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

// Uniformity measures of finite point sets on the sphere.
//
//   rho_min  smallest pairwise great-circle distance
//   rho_max  diameter of the largest empty spherical cap
//   ratio    rho_max / rho_min
//
// Witness ties are resolved deterministically: the lexicographically smallest
// index pair for rho_min, and the lexicographically smallest center among
// equally good candidates for rho_max.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sphtess/sphgeom.hpp"
#include "sphtess/tessellate.hpp"

namespace sphtess {

struct MinGap {
  Radians dist;
  std::array<std::size_t, 2> pair{0, 1};
};

struct MaxGap {
  Radians diameter;  // twice the achieved distance from center to the set
  UnitVec3 center;
};

struct GapReport {
  std::size_t n = 0;
  Radians rho_min;
  std::array<std::size_t, 2> min_pair{0, 1};
  Radians rho_max;
  UnitVec3 center;
  double ratio = 0.0;
};

// Point count above which min_gap switches from the quadratic scan to the
// kd-tree. Both give identical results.
inline constexpr std::size_t kIndexedMinGapThreshold = 4096;

// Throws TooFewPoints for fewer than two points.
MinGap min_gap(std::span<const UnitVec3> points);
MinGap min_gap_brute(std::span<const UnitVec3> points);
MinGap min_gap_indexed(std::span<const UnitVec3> points);

// Largest empty cap. One point gives (2 pi, antipode); two points give the
// antipode of their midpoint (any great-circle point between them when they
// are antipodal). Up to kBruteForceLimit points every candidate center is
// enumerated; above it the hull is used, falling back to enumeration for
// coplanar input. Throws EmptySet.
MaxGap max_gap_exact(std::span<const UnitVec3> points);

// Candidate enumeration: both poles of the plane through every triple, the
// antipode of every non-antipodal pair midpoint, the antipode of every point.
MaxGap max_gap_brute(std::span<const UnitVec3> points);

// Hull facet caps (spherical Delaunay circumcenters). Sets whose hull misses
// the origin also get the antipodes of hull-edge midpoints and of the points.
// Throws TooFewPoints / DegenerateHull.
MaxGap max_gap_delaunay(std::span<const UnitVec3> points);

// M points of the Fibonacci lattice, deterministic.
std::vector<UnitVec3> fibonacci_lattice(std::size_t m);

// Covering radius bound of the M-point lattice, kFibonacciCoveringConstant / sqrt(M).
Radians fibonacci_covering_bound(std::size_t m);

// Lower bound on rho_max from lattice samples. Throws OutOfRange for M < 1000
// and EmptySet for an empty set.
Radians grid_oracle_max_gap(std::span<const UnitVec3> points, std::size_t m);

// Throws TooFewPoints.
GapReport gap_ratio(std::span<const UnitVec3> points);

// Reports for every prefix of 2..N points, in order. The scan keeps an
// incremental hull and a running closest pair. Each report matches
// gap_ratio() of the same prefix: rho_min and its pair exactly, rho_max to
// rounding (the static hull may split cocircular points differently).
// Returns an empty list for N < 2; throws OutOfRange when N exceeds the point
// count.
std::vector<GapReport> prefix_gap_ratios(std::span<const UnitVec3> points, std::size_t n);
std::vector<GapReport> prefix_gap_ratios(SolidKind kind, std::size_t n);

// Largest ratio in a scan; 0 for an empty list.
double max_ratio(std::span<const GapReport> reports);

// Gap measures of the depth-k dissection of an equilateral face, with the
// empty cap restricted to the face and centered at its centroid. The point
// overload checks that `points` is exactly the depth-k point set (any order)
// and throws IncompleteLevel otherwise.
GapReport face_restricted_report(const SphTriangle& face, std::span<const UnitVec3> points);
GapReport face_restricted_report(const SphTriangle& face, unsigned depth);

// Lattice samples inside the face; twice the largest sampled distance to the
// set. Throws OutOfRange for M < 1000 and EmptySet if no sample lands in the
// face.
Radians face_grid_oracle(const SphTriangle& face, std::span<const UnitVec3> points, std::size_t m);

// {"n":..,"rho_min":..,"min_pair":[i,j],"rho_max":..,"center":[x,y,z],"ratio":..}
// with 12 significant digits; an infinite ratio is written as null.
std::string to_json(const GapReport& report);

}  // namespace sphtess
