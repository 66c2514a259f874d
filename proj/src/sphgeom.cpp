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

#include "sphtess/sphgeom.hpp"

#include <cmath>

#include "sphtess/constants.hpp"

namespace sphtess {

UnitVec3 UnitVec3::normalize(const Vec3& v) {
  const double n = norm(v);
  if (!(n > tol::kZeroNorm)) {
    throw Error(ErrorCode::ZeroVector, "cannot normalize a vector of norm <= 1e-15");
  }
  return UnitVec3(v / n);
}

UnitVec3 UnitVec3::adopt(const Vec3& v) {
  const double n = norm(v);
  if (std::abs(n - 1.0) <= tol::kUnitNorm) return UnitVec3(v);
  return normalize(v);
}

UnitVec3 normalize(const Vec3& v) { return UnitVec3::normalize(v); }

Radians sph_dist(const UnitVec3& a, const UnitVec3& b) {
  return Radians{std::atan2(norm(cross(a.vec(), b.vec())), dot(a.vec(), b.vec()))};
}

UnitVec3 midpoint(const UnitVec3& a, const UnitVec3& b) {
  if (sph_dist(a, b).value >= kPi - tol::kAntipodal) {
    throw Error(ErrorCode::AntipodalPair, "midpoint of antipodal points is not unique");
  }
  // a + b is evaluated componentwise, so swapping the arguments gives the
  // same bits.
  return normalize(a.vec() + b.vec());
}

SphTriangle::SphTriangle(const UnitVec3& a, const UnitVec3& b, const UnitVec3& c) : v_{a, b, c} {
  for (std::size_t i = 0; i < 3; ++i) {
    const double d = sph_dist(v_[i], v_[(i + 1) % 3]).value;
    if (!(d > 0.0) || !(d < kPi)) {
      throw Error(ErrorCode::DegenerateTriangle, "triangle side must lie strictly between 0 and pi");
    }
  }
  if (!(std::abs(triple(a.vec(), b.vec(), c.vec())) > tol::kDegenerateTriangle)) {
    throw Error(ErrorCode::DegenerateTriangle, "triangle has zero area");
  }
}

int SphTriangle::orientation() const {
  return triple(v_[0].vec(), v_[1].vec(), v_[2].vec()) > 0.0 ? 1 : -1;
}

std::optional<UnitVec3> circle_pole(const UnitVec3& a, const UnitVec3& b, const UnitVec3& c) {
  const Vec3 n = cross(b.vec() - a.vec(), c.vec() - a.vec());
  if (!(norm(n) > tol::kCollinear)) return std::nullopt;
  return normalize(n);
}

std::pair<UnitVec3, UnitVec3> circumcenter(const SphTriangle& t) {
  const double m = triple(t.a().vec(), t.b().vec(), t.c().vec());
  if (std::abs(m) <= tol::kGreatCircleTriple) {
    throw Error(ErrorCode::DegenerateTriangle, "vertices lie on one great circle");
  }
  Vec3 n = cross(t.b().vec() - t.a().vec(), t.c().vec() - t.a().vec());
  // n . a equals the mixed product, so the sign picks the interior side.
  if (m < 0.0) n = -n;
  const UnitVec3 c = normalize(n);
  return {c, c.antipode()};
}

UnitVec3 centroid(const SphTriangle& t) { return normalize(t.a().vec() + t.b().vec() + t.c().vec()); }

namespace {

// Angle at p between the arcs towards q and r.
Radians vertex_angle(const Vec3& p, const Vec3& q, const Vec3& r) {
  // (p x q) . (p x r) = q . r - (p . q)(p . r) and |(p x q) x (p x r)| = |p . (q x r)|.
  const double num = std::abs(triple(p, q, r));
  const double den = dot(q, r) - dot(p, q) * dot(p, r);
  return Radians{std::atan2(num, den)};
}

}  // namespace

std::array<Radians, 3> interior_angles(const SphTriangle& t) {
  const Vec3& a = t.a().vec();
  const Vec3& b = t.b().vec();
  const Vec3& c = t.c().vec();
  return {vertex_angle(a, b, c), vertex_angle(b, c, a), vertex_angle(c, a, b)};
}

Radians spherical_area(const SphTriangle& t) {
  const auto angles = interior_angles(t);
  return angles[0] + angles[1] + angles[2] - Radians{kPi};
}

bool contains(const SphTriangle& t, const UnitVec3& p) {
  const double s = static_cast<double>(t.orientation());
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec3 n = cross(t[i].vec(), t[(i + 1) % 3].vec());
    if (s * dot(n, p.vec()) / norm(n) < -tol::kPlaneSide) return false;
  }
  return true;
}

Vec3 tangent_project(const UnitVec3& base, const UnitVec3& p) {
  if (sph_dist(base, p).value >= kPi / 2.0) {
    throw Error(ErrorCode::OutOfHemisphere, "point is not in the open hemisphere around the base");
  }
  return p.vec() / dot(base, p);
}

UnitVec3 any_orthogonal(const UnitVec3& p) {
  const Vec3 v = p.vec();
  const double ax = std::abs(v.x);
  const double ay = std::abs(v.y);
  const double az = std::abs(v.z);
  Vec3 axis{1.0, 0.0, 0.0};
  if (ay <= ax && ay <= az) {
    axis = {0.0, 1.0, 0.0};
  } else if (az <= ax && az <= ay) {
    axis = {0.0, 0.0, 1.0};
  }
  return normalize(cross(v, axis));
}

}  // namespace sphtess
