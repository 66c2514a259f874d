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

// Platonic seed solids, triangular dissection, and the deterministic online
// point stream: solid vertices first (an antipodal pair leading when the solid
// has one), then the new points of each global dissection depth in turn.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sphtess/sphgeom.hpp"

namespace sphtess {

enum class SolidKind { tetrahedron, octahedron, icosahedron };

std::string_view to_string(SolidKind kind);
// Accepts "tetra", "tetrahedron", "octa", "octahedron", "icosa", "icosahedron".
std::optional<SolidKind> parse_solid_kind(std::string_view name);

using VertexIndex = std::size_t;
using FaceIndices = std::array<VertexIndex, 3>;
using EdgeIndices = std::array<VertexIndex, 2>;

struct Solid {
  SolidKind kind = SolidKind::icosahedron;
  std::vector<UnitVec3> vertices;
  // Counterclockwise seen from outside, sorted by smallest vertex index.
  std::vector<FaceIndices> faces;
  // Canonical edges {lo, hi} with lo < hi, sorted; the position in this list
  // is the edge id.
  std::vector<EdgeIndices> edges;

  SphTriangle face_triangle(std::size_t f) const;
  std::size_t edge_id(VertexIndex a, VertexIndex b) const;
};

// Builds the solid; see Solid for the ordering guarantees.
Solid make_solid(SolidKind kind);

// Closed-form common edge length: acos(-1/3), pi/2, acos(1/sqrt 5).
Radians solid_edge_length(SolidKind kind);

// Total points after the complete depth-k subdivision: F * 4^k / 2 + 2.
std::size_t vertex_count(SolidKind kind, unsigned depth);

// One application of the triangular dissection:
// {<a, ab, ac>, <ab, b, bc>, <c, ac, bc>, <ab, ac, bc>}.
std::array<SphTriangle, 4> dissect(const SphTriangle& t);

struct Arc {
  UnitVec3 from;
  UnitVec3 to;
};

// The nine edges induced by dissect(): six on the boundary (a-ab, ab-b, b-bc,
// bc-c, c-ac, ac-a) then three central (ac-bc, bc-ab, ab-ac).
std::array<Arc, 9> edge_set(const SphTriangle& t);

// All triangles of the depth-k dissection of t.
std::vector<SphTriangle> dissect_depth(const SphTriangle& t, unsigned depth);

// Symbolic identity of a tessellation vertex.
struct SolidVertex {
  VertexIndex index = 0;
  friend constexpr auto operator<=>(const SolidVertex&, const SolidVertex&) = default;
};

// Point at arc fraction numerator / 2^level from solid vertex lo towards hi.
// numerator is odd, so level is the depth at which the point first appears.
struct EdgePoint {
  VertexIndex lo = 0;
  VertexIndex hi = 0;
  std::uint64_t numerator = 0;
  unsigned level = 0;
  friend constexpr auto operator<=>(const EdgePoint&, const EdgePoint&) = default;
};

// Strict interior point of a face at lattice coordinates (i, j) of the
// 2^level subdivision, where i counts towards the face's second vertex and j
// towards its third. (i, j) are not both even.
struct FaceInterior {
  std::size_t face = 0;
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  unsigned level = 0;
  friend constexpr auto operator<=>(const FaceInterior&, const FaceInterior&) = default;
};

using PointId = std::variant<SolidVertex, EdgePoint, FaceInterior>;

unsigned point_level(const PointId& id);

struct TessPoint {
  PointId id;
  UnitVec3 position;
};

// New points of the global depth-k subdivision, each exactly once. Depth 0 is
// the solid's vertices in stored order. For k >= 1 the faces are visited in
// index order; for each face, first the new points on the edges it owns (an
// edge is owned by its lowest-index face) by edge id and then position from
// the lower vertex, then its new interior points by (i, j) lexicographically.
std::vector<TessPoint> level_points(const Solid& solid, unsigned depth);

// Points of the depth-k dissection of a single triangle, ordered level by
// level as level_points orders them (edges a-b, a-c, b-c; then interior).
std::vector<UnitVec3> dissection_points(const SphTriangle& t, unsigned depth);

// Resumable point stream over the global subdivision of a solid.
class TessellationStream {
 public:
  explicit TessellationStream(Solid solid);

  // Index (0-based) and position of the next point.
  std::pair<std::size_t, UnitVec3> next();

  // The next n points.
  std::vector<UnitVec3> take(std::size_t n);

  std::size_t emitted() const { return emitted_; }
  // Depth of the point returned by the next call to next().
  unsigned depth() const;
  std::size_t position_in_level() const { return cursor_; }
  const Solid& solid() const { return solid_; }

 private:
  void load_level();

  Solid solid_;
  unsigned depth_ = 0;
  std::size_t cursor_ = 0;
  std::size_t emitted_ = 0;
  std::vector<TessPoint> level_;
};

// First n points of the stream for a solid.
std::vector<UnitVec3> stream_points(SolidKind kind, std::size_t n);

}  // namespace sphtess
