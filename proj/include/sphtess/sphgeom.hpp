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

// Spherical trigonometry on the unit 2-sphere.
//
// Points are UnitVec3 values; arcs and angles are Radians. All functions are
// pure and thread-safe. Conventions:
//   - distances use atan2(|a x b|, a . b), never acos of the dot product;
//   - triangles are stored counterclockwise when seen from outside the sphere
//     (a . (b x c) > 0), although most operations accept either orientation;
//   - containment is boundary inclusive.

#include <array>
#include <compare>
#include <optional>
#include <utility>

#include "sphtess/error.hpp"
#include "sphtess/vec3.hpp"

namespace sphtess {

struct Radians {
  double value = 0.0;

  constexpr Radians() = default;
  constexpr explicit Radians(double v) : value(v) {}

  friend constexpr auto operator<=>(const Radians&, const Radians&) = default;
  friend constexpr Radians operator+(Radians a, Radians b) { return Radians{a.value + b.value}; }
  friend constexpr Radians operator-(Radians a, Radians b) { return Radians{a.value - b.value}; }
  friend constexpr Radians operator*(double s, Radians a) { return Radians{s * a.value}; }
  friend constexpr Radians operator*(Radians a, double s) { return Radians{s * a.value}; }
  friend constexpr Radians operator/(Radians a, double s) { return Radians{a.value / s}; }
  friend constexpr double operator/(Radians a, Radians b) { return a.value / b.value; }
};

class UnitVec3 {
 public:
  // (0, 0, 1); handy default for containers.
  constexpr UnitVec3() : v_{0.0, 0.0, 1.0} {}

  // Throws ZeroVector when |v| <= 1e-15.
  static UnitVec3 normalize(const Vec3& v);

  // Keeps the exact bits of v when it is already unit length (within 1e-12),
  // otherwise normalizes. Used when reading points back from files.
  static UnitVec3 adopt(const Vec3& v);

  static UnitVec3 from_xyz(double x, double y, double z) { return normalize({x, y, z}); }

  constexpr double x() const { return v_.x; }
  constexpr double y() const { return v_.y; }
  constexpr double z() const { return v_.z; }
  constexpr const Vec3& vec() const { return v_; }

  constexpr UnitVec3 antipode() const { return UnitVec3(-v_); }

  friend constexpr bool operator==(const UnitVec3&, const UnitVec3&) = default;

 private:
  constexpr explicit UnitVec3(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

inline double dot(const UnitVec3& a, const UnitVec3& b) { return dot(a.vec(), b.vec()); }

// Ordered vertex triple with pairwise arcs in (0, pi) and non-zero area.
class SphTriangle {
 public:
  // Throws DegenerateTriangle when a side is 0 or pi, or the area vanishes.
  SphTriangle(const UnitVec3& a, const UnitVec3& b, const UnitVec3& c);

  const UnitVec3& a() const { return v_[0]; }
  const UnitVec3& b() const { return v_[1]; }
  const UnitVec3& c() const { return v_[2]; }
  const UnitVec3& operator[](std::size_t i) const { return v_[i]; }

  // The vertex set of the triangle.
  const std::array<UnitVec3, 3>& vertices() const { return v_; }

  // Sign of a . (b x c): +1 for counterclockwise seen from outside.
  int orientation() const;

 private:
  std::array<UnitVec3, 3> v_;
};

UnitVec3 normalize(const Vec3& v);

// Great-circle distance in [0, pi].
Radians sph_dist(const UnitVec3& a, const UnitVec3& b);

// Midpoint of the minor arc. Throws AntipodalPair when the arc is not unique.
// Bitwise symmetric in its arguments.
UnitVec3 midpoint(const UnitVec3& a, const UnitVec3& b);

// Both spherical circumcenters; first lies on the triangle's interior side.
// Throws DegenerateTriangle when the vertices share a great circle.
std::pair<UnitVec3, UnitVec3> circumcenter(const SphTriangle& t);

// Pole n/|n| of the plane through three points, n = (b - a) x (c - a). Unlike
// circumcenter() this accepts triples on a common great circle (the result is
// then a pole of that circle). Empty when the points are collinear in R^3.
std::optional<UnitVec3> circle_pole(const UnitVec3& a, const UnitVec3& b, const UnitVec3& c);

// normalize(a + b + c). Equidistant from the vertices only for equilateral
// triangles.
UnitVec3 centroid(const SphTriangle& t);

// Interior angles at a, b, c, measured in the tangent planes.
std::array<Radians, 3> interior_angles(const SphTriangle& t);

// Spherical excess (Girard): sum of interior angles minus pi.
Radians spherical_area(const SphTriangle& t);

// True when p lies in t or on its boundary.
bool contains(const SphTriangle& t, const UnitVec3& p);

// Central projection of p onto the plane tangent at base. The planar distance
// from base equals tan(sph_dist(base, p)). Throws OutOfHemisphere when
// sph_dist(base, p) >= pi/2.
Vec3 tangent_project(const UnitVec3& base, const UnitVec3& p);

// Any unit vector orthogonal to p, chosen deterministically.
UnitVec3 any_orthogonal(const UnitVec3& p);

}  // namespace sphtess
