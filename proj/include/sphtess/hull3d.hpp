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

// Incremental 3D convex hull with a conflict graph.
//
// For points on the unit sphere the hull facets are the spherical Delaunay
// triangles and the outward facet normals are the Voronoi vertices. A point
// sees a facet only when it is strictly above the facet plane (signed
// distance > 1e-12); coplanar points are treated as not visible, so among
// cocircular configurations the insertion order decides the triangulation.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "sphtess/sphgeom.hpp"

namespace sphtess {

struct HullFacet {
  std::array<std::size_t, 3> vertices;  // counterclockwise seen from outside
  Vec3 normal;                          // unit outward normal
  double offset = 0.0;                  // normal . x = offset on the facet plane
};

struct Hull {
  std::vector<UnitVec3> points;
  std::vector<HullFacet> facets;
  bool origin_interior = false;

  std::size_t vertex_count() const;
  std::size_t edge_count() const { return facets.size() * 3 / 2; }
};

// Throws TooFewPoints for fewer than four points and DegenerateHull when all
// points are coplanar. Points are inserted in a fixed pseudo-random order;
// the facet set is deterministic for a fixed input.
Hull build_hull(std::span<const UnitVec3> points);

// One spherical circumcenter per facet (the normalized outward normal); each
// is a spherical Voronoi vertex of the input. Throws OriginNotInterior.
std::vector<UnitVec3> delaunay_circumcenters(const Hull& hull);

// Hull maintained while points are inserted in index order. The seed simplex
// uses points 0 and 1, the first point not collinear with them and the first
// point not coplanar with those three. Once every index below n has been
// processed the hull equals the hull of the first n points.
class IncrementalHull {
 public:
  using FacetId = std::uint32_t;

  struct Facet {
    std::array<std::size_t, 3> v;
    std::array<FacetId, 3> adj;  // adj[e] shares edge (v[e], v[e + 1])
    Vec3 normal;
    double offset = 0.0;
    bool alive = true;
  };

  struct Change {
    std::vector<FacetId> created;
    std::vector<FacetId> removed;
  };

  explicit IncrementalHull(std::span<const UnitVec3> points);

  // Number of leading indices whose points are processed.
  std::size_t prefix() const { return cursor_; }
  bool done() const { return cursor_ >= points_.size(); }

  // Processes the next index. Points inside the hull or on its surface are
  // skipped (empty change).
  Change insert_next();

  // Processes indices until prefix() >= n.
  void insert_until(std::size_t n);

  // Facets created by the seed simplex.
  const std::vector<FacetId>& seed_facets() const { return seed_; }
  // Indices of the four seed points.
  const std::array<std::size_t, 4>& seed_points() const { return seed_points_; }

  const Facet& facet(FacetId id) const { return facets_[id]; }
  std::size_t facet_slots() const { return facets_.size(); }
  std::vector<FacetId> alive_facets() const;

  bool origin_interior() const;
  Hull snapshot() const;

 private:
  double height(const Facet& f, std::size_t p) const;
  FacetId make_facet(std::size_t a, std::size_t b, std::size_t c);
  void add_conflicts_from(FacetId nf, const std::vector<std::size_t>& candidates);
  void advance_cursor();
  Change insert_point(std::size_t p);

  std::vector<UnitVec3> points_;
  std::vector<Facet> facets_;
  std::vector<std::vector<std::size_t>> facet_conflicts_;
  std::vector<std::vector<FacetId>> point_conflicts_;
  std::vector<std::uint8_t> processed_;
  std::vector<std::uint32_t> facet_mark_;
  std::vector<std::uint32_t> point_mark_;
  std::uint32_t stamp_ = 0;
  std::vector<FacetId> seed_;
  std::array<std::size_t, 4> seed_points_{};
  std::size_t cursor_ = 0;
};

}  // namespace sphtess
