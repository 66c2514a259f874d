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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sphtess/constants.hpp"
#include "sphtess/sphgeom.hpp"
#include "sphtess/tessellate.hpp"

using namespace sphtess;

namespace {

const double kAlphaIcosa = std::acos(1.0 / std::sqrt(5.0));

SphTriangle octant() {
  return SphTriangle(UnitVec3::from_xyz(1, 0, 0), UnitVec3::from_xyz(0, 1, 0), UnitVec3::from_xyz(0, 0, 1));
}

SphTriangle random_triangle(std::mt19937_64& g) {
  while (true) {
    try {
      return SphTriangle(oracle::random_unit(g), oracle::random_unit(g), oracle::random_unit(g));
    } catch (const Error&) {
    }
  }
}

// Equilateral triangle of side alpha around the north pole.
SphTriangle equilateral(double alpha) {
  const double r = std::asin(2.0 * std::sin(alpha / 2.0) / std::sqrt(3.0));
  std::array<UnitVec3, 3> v;
  for (int k = 0; k < 3; ++k) {
    const double t = 2.0 * kPi * k / 3.0;
    v[k] = UnitVec3::from_xyz(std::sin(r) * std::cos(t), std::sin(r) * std::sin(t), std::cos(r));
  }
  return SphTriangle(v[0], v[1], v[2]);
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(normalize({0, 2, 0}) == UnitVec3::from_xyz(0, 1, 0));
  const UnitVec3 p = normalize({0, 1, kGoldenRatio});
  CHECK(p.y() == doctest::Approx(0.52573).epsilon(1e-5));
  CHECK(p.z() == doctest::Approx(0.85065).epsilon(1e-5));
  CHECK_THROWS_AS(normalize({0, 0, 0}), Error);
  try {
    normalize({0, 0, 1e-16});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
}

TEST_CASE("adopt keeps exact bits of unit vectors") {
  const Vec3 v{0.6, 0.8, 0.0};
  CHECK(UnitVec3::adopt(v).vec() == v);
  const UnitVec3 far = UnitVec3::adopt({0, 0, 2});
  CHECK(far.z() == 1.0);
}

TEST_CASE("sph_dist examples") {
  CHECK(sph_dist(UnitVec3::from_xyz(0, 1, 0), UnitVec3::from_xyz(0, -1, 0)).value == doctest::Approx(kPi).epsilon(1e-15));
  const Solid ico = make_solid(SolidKind::icosahedron);
  const auto& e = ico.edges[0];
  CHECK(std::abs(sph_dist(ico.vertices[e[0]], ico.vertices[e[1]]).value - kAlphaIcosa) < 1e-12);
  const UnitVec3 a = UnitVec3::from_xyz(0.3, -0.2, 0.9);
  CHECK(sph_dist(a, a).value == 0.0);
}

TEST_CASE("sph_dist agrees with independent formulas") {
  auto g = oracle::rng(1);
  for (int t = 0; t < 1000; ++t) {
    const UnitVec3 a = oracle::random_unit(g);
    const UnitVec3 b = oracle::random_unit(g);
    CHECK(std::abs(sph_dist(a, b).value - oracle::chord_dist(a.vec(), b.vec())) < 1e-12);
    CHECK(std::abs(sph_dist(a, b).value - oracle::acos_dist(a.vec(), b.vec())) < 1e-7);
  }
}

TEST_CASE("triangle inequality") {
  auto g = oracle::rng(2);
  for (int t = 0; t < 2000; ++t) {
    const UnitVec3 a = oracle::random_unit(g), b = oracle::random_unit(g), c = oracle::random_unit(g);
    CHECK(sph_dist(a, c).value <= sph_dist(a, b).value + sph_dist(b, c).value + 1e-12);
  }
}

TEST_CASE("midpoint") {
  const UnitVec3 m = midpoint(UnitVec3::from_xyz(1, 0, 0), UnitVec3::from_xyz(0, 1, 0));
  CHECK(std::abs(m.x() - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(m.y() - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(m.z() == 0.0);
  try {
    midpoint(UnitVec3::from_xyz(0, 1, 0), UnitVec3::from_xyz(0, -1, 0));
    FAIL("expected AntipodalPair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AntipodalPair);
  }
  const Solid ico = make_solid(SolidKind::icosahedron);
  const UnitVec3& a = ico.vertices[ico.edges[3][0]];
  const UnitVec3& b = ico.vertices[ico.edges[3][1]];
  const UnitVec3 mid = midpoint(a, b);
  CHECK(std::abs(sph_dist(mid, a).value - kAlphaIcosa / 2.0) < 1e-12);
  CHECK(std::abs(sph_dist(mid, b).value - 0.55357) < 1e-5);
}

TEST_CASE("midpoint is bitwise symmetric") {
  auto g = oracle::rng(3);
  for (int t = 0; t < 1000; ++t) {
    const UnitVec3 a = oracle::random_unit(g), b = oracle::random_unit(g);
    if (sph_dist(a, b).value > kPi - 1e-6) continue;
    CHECK(midpoint(a, b) == midpoint(b, a));
  }
}

TEST_CASE("circumcenter") {
  const auto [c, anti] = circumcenter(octant());
  const double s = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(c.x() - s) < 1e-15);
  CHECK(std::abs(c.y() - s) < 1e-15);
  CHECK(std::abs(c.z() - s) < 1e-15);
  CHECK(anti == c.antipode());

  const SphTriangle eq = equilateral(0.8);
  CHECK(sph_dist(circumcenter(eq).first, centroid(eq)).value < 1e-12);

  // Three points on the equator share a great circle.
  CHECK_THROWS_AS(SphTriangle(UnitVec3::from_xyz(1, 0, 0), UnitVec3::from_xyz(0, 1, 0), UnitVec3::from_xyz(-1, 0.2, 0)),
                  Error);
}

TEST_CASE("circumcenter equidistance on random triangles") {
  auto g = oracle::rng(4);
  for (int t = 0; t < 1000; ++t) {
    const SphTriangle tri = random_triangle(g);
    for (const UnitVec3& c : {circumcenter(tri).first, circumcenter(tri).second}) {
      const double d0 = sph_dist(c, tri.a()).value;
      const double d1 = sph_dist(c, tri.b()).value;
      const double d2 = sph_dist(c, tri.c()).value;
      CHECK(std::max({d0, d1, d2}) - std::min({d0, d1, d2}) <= 1e-10);
    }
    // The first center is on the triangle's side.
    const Vec3 sum = tri.a().vec() + tri.b().vec() + tri.c().vec();
    CHECK(dot(circumcenter(tri).first.vec(), sum) > 0.0);
  }
}

TEST_CASE("circle_pole accepts great-circle triples") {
  const auto pole = circle_pole(UnitVec3::from_xyz(1, 0, 0), UnitVec3::from_xyz(0, 1, 0), UnitVec3::from_xyz(-1, 0, 0));
  REQUIRE(pole);
  CHECK(std::abs(std::abs(pole->z()) - 1.0) < 1e-15);
  const UnitVec3 p = UnitVec3::from_xyz(1, 0, 0);
  CHECK_FALSE(circle_pole(p, p, UnitVec3::from_xyz(0, 1, 0)));
}

TEST_CASE("centroid") {
  const UnitVec3 c = centroid(octant());
  CHECK(std::abs(sph_dist(c, UnitVec3::from_xyz(1, 0, 0)).value - 0.95532) < 1e-5);
  const Solid ico = make_solid(SolidKind::icosahedron);
  const SphTriangle face = ico.face_triangle(0);
  const double expected = std::asin(2.0 * std::sin(kAlphaIcosa / 2.0) / std::sqrt(3.0));
  for (const auto& v : face.vertices()) CHECK(std::abs(sph_dist(centroid(face), v).value - expected) < 1e-12);
  CHECK(std::abs(expected - 0.65236) < 1e-5);
}

TEST_CASE("area and angles") {
  CHECK(std::abs(spherical_area(octant()).value - kPi / 2.0) < 1e-12);
  for (const Radians a : interior_angles(octant())) CHECK(std::abs(a.value - kPi / 2.0) < 1e-12);

  const Solid ico = make_solid(SolidKind::icosahedron);
  for (std::size_t f = 0; f < ico.faces.size(); ++f) {
    const SphTriangle face = ico.face_triangle(f);
    CHECK(std::abs(spherical_area(face).value - kPi / 5.0) < 1e-12);
    for (const Radians a : interior_angles(face)) CHECK(std::abs(a.value - 2.0 * kPi / 5.0) < 1e-12);
  }
}

TEST_CASE("law of cosines and sine rule on random triangles") {
  auto g = oracle::rng(5);
  for (int t = 0; t < 1000; ++t) {
    const SphTriangle tri = random_triangle(g);
    const auto ang = interior_angles(tri);
    // Side opposite vertex k.
    const double s0 = sph_dist(tri.b(), tri.c()).value;
    const double s1 = sph_dist(tri.a(), tri.c()).value;
    const double s2 = sph_dist(tri.a(), tri.b()).value;
    CHECK(std::abs(std::cos(s0) - (std::cos(s1) * std::cos(s2) + std::sin(s1) * std::sin(s2) * std::cos(ang[0].value))) <
          1e-10);
    CHECK(std::abs(std::cos(s1) - (std::cos(s0) * std::cos(s2) + std::sin(s0) * std::sin(s2) * std::cos(ang[1].value))) <
          1e-10);
    const double r0 = std::sin(s0) / std::sin(ang[0].value);
    const double r1 = std::sin(s1) / std::sin(ang[1].value);
    const double r2 = std::sin(s2) / std::sin(ang[2].value);
    if (std::min({std::sin(ang[0].value), std::sin(ang[1].value), std::sin(ang[2].value)}) > 1e-3) {
      CHECK(std::abs(r0 - r1) < 1e-10 * std::max(1.0, r0));
      CHECK(std::abs(r1 - r2) < 1e-10 * std::max(1.0, r0));
    }
  }
}

TEST_CASE("Girard additivity under dissection") {
  auto g = oracle::rng(6);
  for (int t = 0; t < 300; ++t) {
    const SphTriangle tri = random_triangle(g);
    if (spherical_area(tri).value < 1e-4) continue;
    double sum = 0.0;
    for (const auto& sub : dissect(tri)) sum += spherical_area(sub).value;
    CHECK(std::abs(sum - spherical_area(tri).value) < 1e-10);
  }
  const SphTriangle face = make_solid(SolidKind::icosahedron).face_triangle(2);
  for (unsigned k = 1; k <= 4; ++k) {
    double sum = 0.0;
    for (const auto& sub : dissect_depth(face, k)) sum += spherical_area(sub).value;
    CHECK(std::abs(sum - kPi / 5.0) < 1e-10);
  }
}

TEST_CASE("contains") {
  const SphTriangle tri = octant();
  CHECK(contains(tri, centroid(tri)));
  CHECK_FALSE(contains(tri, centroid(tri).antipode()));
  CHECK(contains(tri, midpoint(tri.a(), tri.b())));
  CHECK(contains(tri, tri.c()));
  CHECK_FALSE(contains(tri, UnitVec3::from_xyz(-0.1, 0.5, 0.5)));
  // Orientation does not matter.
  const SphTriangle cw(tri.a(), tri.c(), tri.b());
  CHECK(cw.orientation() == -1);
  CHECK(contains(cw, centroid(tri)));
}

TEST_CASE("tangent_project") {
  const UnitVec3 base = UnitVec3::from_xyz(0, 0, 1);
  CHECK(tangent_project(base, base) == base.vec());
  const UnitVec3 p = UnitVec3::from_xyz(std::sin(kPi / 4), 0, std::cos(kPi / 4));
  CHECK(std::abs(norm(tangent_project(base, p) - base.vec()) - 1.0) < 1e-12);
  CHECK_THROWS_AS(tangent_project(base, UnitVec3::from_xyz(1, 0, 0)), Error);
  CHECK_THROWS_AS(tangent_project(base, UnitVec3::from_xyz(0, 0, -1)), Error);
  auto g = oracle::rng(8);
  for (int t = 0; t < 200; ++t) {
    const UnitVec3 q = oracle::random_unit(g);
    const double d = sph_dist(base, q).value;
    if (d > kPi / 2 - 1e-3) continue;
    CHECK(std::abs(norm(tangent_project(base, q) - base.vec()) - std::tan(d)) < 1e-12 * std::max(1.0, std::tan(d)));
  }
}

TEST_CASE("any_orthogonal") {
  auto g = oracle::rng(9);
  for (int t = 0; t < 200; ++t) {
    const UnitVec3 p = oracle::random_unit(g);
    CHECK(std::abs(dot(p, any_orthogonal(p))) < 1e-15);
    CHECK(any_orthogonal(p) == any_orthogonal(p));
  }
}

TEST_CASE("degenerate triangles are rejected") {
  const UnitVec3 a = UnitVec3::from_xyz(1, 0, 0);
  try {
    SphTriangle(a, a, UnitVec3::from_xyz(0, 1, 0));
    FAIL("expected DegenerateTriangle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateTriangle);
  }
  CHECK_THROWS_AS(SphTriangle(a, a.antipode(), UnitVec3::from_xyz(0, 1, 0)), Error);
}
