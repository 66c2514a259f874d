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

#include <cstddef>
#include <numbers>

namespace sphtess {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kGoldenRatio = std::numbers::phi;

// Tolerance table. Every numeric threshold used by the library lives here.
namespace tol {

// Norm below which a vector cannot be normalized.
inline constexpr double kZeroNorm = 1e-15;
// Accepted deviation of |v| from 1 for a unit vector.
inline constexpr double kUnitNorm = 1e-12;
// Identities that hold by construction (midpoint equidistance, projections).
inline constexpr double kConstructed = 1e-12;
// Compound trigonometric identities (laws of sines/cosines, area additivity).
inline constexpr double kCompound = 1e-10;
// Two points closer than pi minus this are not treated as antipodal.
inline constexpr double kAntipodal = 1e-9;
// |a . (b x c)| at or below this means the triple lies on one great circle.
inline constexpr double kGreatCircleTriple = 1e-12;
// A triangle whose mixed product is below this has no area.
inline constexpr double kDegenerateTriangle = 1e-18;
// Plane-side tolerance for boundary-inclusive containment (unit normals).
inline constexpr double kPlaneSide = 1e-12;
// Signed distance (unit normal) above which a point sees a hull facet.
inline constexpr double kHullVisible = 1e-12;
// Cross products shorter than this mean the three points are collinear.
inline constexpr double kCollinear = 1e-14;
// Slack used when pruning candidate sets before an exact distance compare.
inline constexpr double kDotSlack = 1e-9;

}  // namespace tol

// Point count at or below which the largest empty circle is found by
// enumerating every candidate center.
inline constexpr std::size_t kBruteForceLimit = 60;

// Covering radius of the M-point Fibonacci lattice is at most
// kFibonacciCoveringConstant / sqrt(M) for M >= 1000 (calibrated against exact
// largest-empty-circle computations on the lattice itself, see tests).
inline constexpr double kFibonacciCoveringConstant = 3.1;

}  // namespace sphtess
