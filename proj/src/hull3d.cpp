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

#include "sphtess/hull3d.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>
#include <utility>

#include "sphtess/constants.hpp"

namespace sphtess {

std::size_t Hull::vertex_count() const {
  std::vector<std::size_t> v;
  v.reserve(facets.size() * 3);
  for (const auto& f : facets) v.insert(v.end(), f.vertices.begin(), f.vertices.end());
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

IncrementalHull::IncrementalHull(std::span<const UnitVec3> points)
    : points_(points.begin(), points.end()),
      point_conflicts_(points.size()),
      processed_(points.size(), 0),
      point_mark_(points.size(), 0) {
  const std::size_t n = points_.size();
  if (n < 4) throw Error(ErrorCode::TooFewPoints, "a hull needs at least four points");

  auto pos = [&](std::size_t i) -> const Vec3& { return points_[i].vec(); };
  const std::size_t i0 = 0;
  std::size_t i1 = 1;
  while (i1 < n && !(norm(pos(i1) - pos(i0)) > tol::kCollinear)) ++i1;
  std::size_t i2 = i1 + 1;
  while (i2 < n && !(norm(cross(pos(i1) - pos(i0), pos(i2) - pos(i0))) > tol::kCollinear)) ++i2;
  if (i2 >= n) throw Error(ErrorCode::DegenerateHull, "all points are collinear");
  const Vec3 base_normal = normalize(cross(pos(i1) - pos(i0), pos(i2) - pos(i0))).vec();
  std::size_t i3 = i2 + 1;
  while (i3 < n && !(std::abs(dot(base_normal, pos(i3) - pos(i0))) > tol::kHullVisible)) ++i3;
  if (i3 >= n) throw Error(ErrorCode::DegenerateHull, "all points are coplanar");

  const std::array<std::size_t, 4> s{i0, i1, i2, i3};
  for (const std::size_t i : s) processed_[i] = 1;
  seed_points_ = s;

  const std::array<std::array<std::size_t, 4>, 4> tri{{{s[0], s[1], s[2], s[3]},
                                                      {s[0], s[1], s[3], s[2]},
                                                      {s[0], s[2], s[3], s[1]},
                                                      {s[1], s[2], s[3], s[0]}}};
  for (const auto& t : tri) {
    const Vec3 nrm = cross(pos(t[1]) - pos(t[0]), pos(t[2]) - pos(t[0]));
    const bool flip = dot(nrm, pos(t[3]) - pos(t[0])) > 0.0;
    seed_.push_back(flip ? make_facet(t[0], t[2], t[1]) : make_facet(t[0], t[1], t[2]));
  }
  std::map<std::pair<std::size_t, std::size_t>, std::pair<FacetId, int>> directed;
  for (const FacetId f : seed_) {
    for (int e = 0; e < 3; ++e) directed[{facets_[f].v[e], facets_[f].v[(e + 1) % 3]}] = {f, e};
  }
  for (const FacetId f : seed_) {
    for (int e = 0; e < 3; ++e) {
      facets_[f].adj[e] = directed.at({facets_[f].v[(e + 1) % 3], facets_[f].v[e]}).first;
    }
  }

  for (std::size_t p = 0; p < n; ++p) {
    if (processed_[p]) continue;
    for (const FacetId f : seed_) {
      if (height(facets_[f], p) > tol::kHullVisible) {
        facet_conflicts_[f].push_back(p);
        point_conflicts_[p].push_back(f);
      }
    }
  }
  advance_cursor();
}

double IncrementalHull::height(const Facet& f, std::size_t p) const {
  return dot(f.normal, points_[p].vec()) - f.offset;
}

IncrementalHull::FacetId IncrementalHull::make_facet(std::size_t a, std::size_t b, std::size_t c) {
  const Vec3& pa = points_[a].vec();
  const Vec3& pb = points_[b].vec();
  const Vec3& pc = points_[c].vec();
  Facet f;
  f.v = {a, b, c};
  f.adj = {0, 0, 0};
  f.normal = normalize(cross(pb - pa, pc - pa)).vec();
  f.offset = dot(f.normal, (pa + pb + pc) / 3.0);
  f.alive = true;
  facets_.push_back(f);
  facet_conflicts_.emplace_back();
  facet_mark_.push_back(0);
  return static_cast<FacetId>(facets_.size() - 1);
}

void IncrementalHull::advance_cursor() {
  while (cursor_ < points_.size() && processed_[cursor_]) ++cursor_;
}

IncrementalHull::Change IncrementalHull::insert_next() {
  if (done()) return {};
  const std::size_t p = cursor_;
  Change change = insert_point(p);
  processed_[p] = 1;
  advance_cursor();
  return change;
}

void IncrementalHull::insert_until(std::size_t n) {
  while (!done() && cursor_ < n) insert_next();
}

void IncrementalHull::add_conflicts_from(FacetId nf, const std::vector<std::size_t>& candidates) {
  for (const std::size_t q : candidates) {
    if (processed_[q] || point_mark_[q] == stamp_) continue;
    point_mark_[q] = stamp_;
    if (height(facets_[nf], q) > tol::kHullVisible) {
      facet_conflicts_[nf].push_back(q);
      point_conflicts_[q].push_back(nf);
    }
  }
}

IncrementalHull::Change IncrementalHull::insert_point(std::size_t p) {
  Change change;
  ++stamp_;
  const std::uint32_t visible_mark = stamp_;
  std::vector<FacetId> visible;
  for (const FacetId f : point_conflicts_[p]) {
    if (!facets_[f].alive || facet_mark_[f] == visible_mark) continue;
    facet_mark_[f] = visible_mark;
    visible.push_back(f);
  }
  point_conflicts_[p].clear();
  point_conflicts_[p].shrink_to_fit();
  if (visible.empty()) return change;
  std::sort(visible.begin(), visible.end());

  struct HorizonEdge {
    std::size_t from;
    std::size_t to;
    FacetId kept;
    FacetId gone;
  };
  std::vector<HorizonEdge> horizon;
  for (const FacetId f : visible) {
    for (int e = 0; e < 3; ++e) {
      const FacetId g = facets_[f].adj[e];
      if (facet_mark_[g] != visible_mark) horizon.push_back({facets_[f].v[e], facets_[f].v[(e + 1) % 3], g, f});
    }
  }

  std::unordered_map<std::size_t, FacetId> starting_at;
  std::unordered_map<std::size_t, FacetId> ending_at;
  for (const auto& h : horizon) {
    const FacetId nf = make_facet(h.from, h.to, p);
    facets_[nf].adj[0] = h.kept;
    Facet& kept = facets_[h.kept];
    for (int e = 0; e < 3; ++e) {
      if (kept.v[e] == h.to && kept.v[(e + 1) % 3] == h.from) kept.adj[e] = nf;
    }
    starting_at[h.from] = nf;
    ending_at[h.to] = nf;
    change.created.push_back(nf);
  }
  for (std::size_t k = 0; k < horizon.size(); ++k) {
    const FacetId nf = change.created[k];
    facets_[nf].adj[1] = starting_at.at(horizon[k].to);
    facets_[nf].adj[2] = ending_at.at(horizon[k].from);
  }

  for (std::size_t k = 0; k < horizon.size(); ++k) {
    ++stamp_;
    point_mark_[p] = stamp_;
    add_conflicts_from(change.created[k], facet_conflicts_[horizon[k].gone]);
    add_conflicts_from(change.created[k], facet_conflicts_[horizon[k].kept]);
  }

  for (const FacetId f : visible) {
    facets_[f].alive = false;
    facet_conflicts_[f].clear();
    facet_conflicts_[f].shrink_to_fit();
    change.removed.push_back(f);
  }
  return change;
}

std::vector<IncrementalHull::FacetId> IncrementalHull::alive_facets() const {
  std::vector<FacetId> out;
  for (std::size_t f = 0; f < facets_.size(); ++f)
    if (facets_[f].alive) out.push_back(static_cast<FacetId>(f));
  return out;
}

bool IncrementalHull::origin_interior() const {
  for (const auto& f : facets_)
    if (f.alive && !(f.offset > tol::kHullVisible)) return false;
  return true;
}

Hull IncrementalHull::snapshot() const {
  Hull h;
  h.points = points_;
  for (const auto& f : facets_) {
    if (f.alive) h.facets.push_back({f.v, f.normal, f.offset});
  }
  h.origin_interior = origin_interior();
  return h;
}

Hull build_hull(std::span<const UnitVec3> points) {
  // Sorted inputs (sweeps) make index-order insertion quadratic, so insert in
  // a fixed pseudo-random order. The Fisher-Yates loop is spelled out because
  // std::shuffle is not specified to be the same across standard libraries.
  const std::size_t n = points.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(0x5eed5eedULL);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

  std::vector<UnitVec3> permuted;
  permuted.reserve(n);
  for (const std::size_t i : order) permuted.push_back(points[i]);
  IncrementalHull inc(permuted);
  inc.insert_until(n);
  Hull h = inc.snapshot();
  h.points.assign(points.begin(), points.end());
  for (auto& f : h.facets)
    for (auto& v : f.vertices) v = order[v];
  return h;
}

std::vector<UnitVec3> delaunay_circumcenters(const Hull& hull) {
  if (!hull.origin_interior) {
    throw Error(ErrorCode::OriginNotInterior, "the origin is not strictly inside the hull");
  }
  std::vector<UnitVec3> out;
  out.reserve(hull.facets.size());
  for (const auto& f : hull.facets) out.push_back(UnitVec3::adopt(f.normal));
  return out;
}

}  // namespace sphtess
