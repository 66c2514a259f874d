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

#include "sphtess/gapmetrics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>

#include "sphtess/constants.hpp"
#include "sphtess/hull3d.hpp"
#include "sphtess/kernels.hpp"
#include "sphtess/spatial.hpp"

namespace sphtess {

namespace {

// Linear scans beat the kd-tree below this size.
constexpr std::size_t kIndexedNearestThreshold = 64;

Radians nearest_dist(std::span<const UnitVec3> points, const UnitVec3& q, const KdTree* tree) {
  return tree ? tree->nearest(q).dist : kernels::nearest(points, q).dist;
}

MaxGap one_point_gap(const UnitVec3& p) { return {Radians{kTwoPi}, p.antipode()}; }

MaxGap two_point_gap(std::span<const UnitVec3> points) {
  const UnitVec3& a = points[0];
  const UnitVec3& b = points[1];
  const UnitVec3 center = sph_dist(a, b).value < kPi - tol::kAntipodal ? midpoint(a, b).antipode() : any_orthogonal(a);
  return {2.0 * kernels::nearest(points, center).dist, center};
}

// Cap of a hull facet: radius is the smallest distance from the outward
// normal to the facet's vertices.
struct CapKey {
  double radius;
  Vec3 center;
  IncrementalHull::FacetId id;
};

struct CapOrder {
  bool operator()(const CapKey& a, const CapKey& b) const {
    if (a.radius != b.radius) return a.radius > b.radius;
    if (lex_less(a.center, b.center)) return true;
    if (lex_less(b.center, a.center)) return false;
    return a.id < b.id;
  }
};

double cap_radius(const Vec3& normal, const std::array<std::size_t, 3>& v, std::span<const UnitVec3> points) {
  const UnitVec3 c = UnitVec3::adopt(normal);
  double r = std::numeric_limits<double>::infinity();
  for (const std::size_t i : v) r = std::min(r, sph_dist(c, points[i]).value);
  return r;
}

CapKey cap_key(const IncrementalHull& hull, std::span<const UnitVec3> points, IncrementalHull::FacetId id) {
  const auto& f = hull.facet(id);
  return {cap_radius(f.normal, f.v, points), f.normal, id};
}

MaxGap max_gap_from_hull(const Hull& hull, std::span<const UnitVec3> points) {
  std::optional<KdTree> tree;
  if (points.size() > kIndexedNearestThreshold) tree.emplace(points);
  const KdTree* tp = tree ? &*tree : nullptr;

  std::optional<CapKey> best;
  CapOrder order;
  auto consider = [&](const CapKey& k) {
    if (!best || order(k, *best)) best = k;
  };
  for (std::size_t id = 0; id < hull.facets.size(); ++id) {
    const auto& f = hull.facets[id];
    consider({cap_radius(f.normal, f.vertices, points), f.normal, static_cast<IncrementalHull::FacetId>(id)});
  }
  if (!hull.origin_interior) {
    constexpr auto kExtra = std::numeric_limits<IncrementalHull::FacetId>::max();
    auto consider_center = [&](const UnitVec3& c) { consider({nearest_dist(points, c, tp).value, c.vec(), kExtra}); };
    for (const auto& f : hull.facets) {
      for (int e = 0; e < 3; ++e) {
        const std::size_t a = f.vertices[e];
        const std::size_t b = f.vertices[(e + 1) % 3];
        if (a < b && sph_dist(points[a], points[b]).value < kPi - tol::kAntipodal) {
          consider_center(midpoint(points[a], points[b]).antipode());
        }
      }
    }
    for (const auto& p : points) consider_center(p.antipode());
  }
  const UnitVec3 center = UnitVec3::adopt(best->center);
  return {2.0 * nearest_dist(points, center, tp), center};
}

GapReport make_report(std::size_t n, const MinGap& mn, const MaxGap& mx) {
  GapReport r;
  r.n = n;
  r.rho_min = mn.dist;
  r.min_pair = mn.pair;
  r.rho_max = mx.diameter;
  r.center = mx.center;
  r.ratio = mx.diameter.value / mn.dist.value;
  return r;
}

void require_pair(std::span<const UnitVec3> points) {
  if (points.size() < 2) throw Error(ErrorCode::TooFewPoints, "need at least two points");
}

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

MinGap min_gap_brute(std::span<const UnitVec3> points) {
  require_pair(points);
  const auto hit = kernels::closest_pair(points);
  return {hit.dist, {hit.i, hit.j}};
}

MinGap min_gap_indexed(std::span<const UnitVec3> points) {
  require_pair(points);
  const auto hit = KdTree(points).closest_pair();
  return {hit.dist, {hit.i, hit.j}};
}

MinGap min_gap(std::span<const UnitVec3> points) {
  return points.size() > kIndexedMinGapThreshold ? min_gap_indexed(points) : min_gap_brute(points);
}

MaxGap max_gap_brute(std::span<const UnitVec3> points) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorCode::EmptySet, "largest empty cap of an empty set");
  if (n == 1) return one_point_gap(points[0]);
  if (n == 2) return two_point_gap(points);

  std::vector<UnitVec3> candidates;
  candidates.reserve(n * (n - 1) * (n - 2) / 3 + n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (const auto pole = circle_pole(points[i], points[j], points[k])) {
          candidates.push_back(*pole);
          candidates.push_back(pole->antipode());
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sph_dist(points[i], points[j]).value < kPi - tol::kAntipodal) {
        candidates.push_back(midpoint(points[i], points[j]).antipode());
      }
    }
  }
  for (const auto& p : points) candidates.push_back(p.antipode());

  const auto hit = kernels::farthest_candidate(candidates, points);
  return {2.0 * hit.dist, candidates[hit.index]};
}

MaxGap max_gap_delaunay(std::span<const UnitVec3> points) {
  return max_gap_from_hull(build_hull(points), points);
}

MaxGap max_gap_exact(std::span<const UnitVec3> points) {
  if (points.size() <= kBruteForceLimit) return max_gap_brute(points);
  try {
    return max_gap_delaunay(points);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateHull) throw;
    return max_gap_brute(points);
  }
}

std::vector<UnitVec3> fibonacci_lattice(std::size_t m) {
  std::vector<UnitVec3> out;
  out.reserve(m);
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  const double md = static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / md;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double t = golden_angle * static_cast<double>(i);
    out.push_back(UnitVec3::normalize({r * std::cos(t), r * std::sin(t), z}));
  }
  return out;
}

Radians fibonacci_covering_bound(std::size_t m) {
  return Radians{kFibonacciCoveringConstant / std::sqrt(static_cast<double>(m))};
}

namespace {

// Largest nearest-point distance over the samples; smallest sample index on
// ties. Thread count does not affect the result.
kernels::NearestHit emptiest_indexed(std::span<const UnitVec3> samples, const KdTree& tree) {
  const auto m = static_cast<std::int64_t>(samples.size());
  kernels::NearestHit best{Radians{-1.0}, 0};
#pragma omp parallel
  {
    kernels::NearestHit local{Radians{-1.0}, 0};
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 0; s < m; ++s) {
      const Radians d = tree.nearest(samples[s]).dist;
      if (d.value > local.dist.value) local = {d, static_cast<std::size_t>(s)};
    }
#pragma omp critical(sphtess_emptiest_indexed)
    if (local.dist.value > best.dist.value || (local.dist.value == best.dist.value && local.index < best.index)) {
      best = local;
    }
  }
  return best;
}

void require_samples(std::size_t m) {
  if (m < 1000) throw Error(ErrorCode::OutOfRange, "grid oracle needs at least 1000 samples");
}

}  // namespace

Radians grid_oracle_max_gap(std::span<const UnitVec3> points, std::size_t m) {
  require_samples(m);
  if (points.empty()) throw Error(ErrorCode::EmptySet, "grid oracle on an empty set");
  const auto samples = fibonacci_lattice(m);
  if (points.size() <= kIndexedNearestThreshold) return 2.0 * kernels::emptiest_sample(samples, points).dist;
  return 2.0 * emptiest_indexed(samples, KdTree(points)).dist;
}

GapReport gap_ratio(std::span<const UnitVec3> points) {
  require_pair(points);
  return make_report(points.size(), min_gap(points), max_gap_exact(points));
}

std::vector<GapReport> prefix_gap_ratios(std::span<const UnitVec3> points, std::size_t n) {
  if (n > points.size()) throw Error(ErrorCode::OutOfRange, "prefix length exceeds the point count");
  std::vector<GapReport> out;
  if (n < 2) return out;
  out.reserve(n - 1);

  const auto all = points.first(n);
  MinGap running{sph_dist(all[0], all[1]), {0, 1}};

  std::optional<IncrementalHull> hull;
  bool hull_failed = false;
  std::set<CapKey, CapOrder> caps;
  std::vector<std::optional<CapKey>> key_of;
  std::size_t exposed = 0;  // alive facets whose plane does not separate the origin

  auto track = [&](const IncrementalHull::Change& ch) {
    for (const auto id : ch.removed) {
      caps.erase(*key_of[id]);
      if (!(hull->facet(id).offset > tol::kHullVisible)) --exposed;
      key_of[id].reset();
    }
    for (const auto id : ch.created) {
      if (key_of.size() <= id) key_of.resize(id + 1);
      key_of[id] = cap_key(*hull, all, id);
      caps.insert(*key_of[id]);
      if (!(hull->facet(id).offset > tol::kHullVisible)) ++exposed;
    }
  };

  for (std::size_t t = 2; t <= n; ++t) {
    const auto prefix = all.first(t);
    if (t > 2) {
      const auto hit = kernels::nearest(prefix.first(t - 1), prefix[t - 1]);
      const kernels::PairHit cand{hit.dist, hit.index, t - 1};
      if (kernels::pair_less(cand, {running.dist, running.pair[0], running.pair[1]})) {
        running = {cand.dist, {cand.i, cand.j}};
      }
    }

    MaxGap mx;
    bool done = false;
    if (t > kBruteForceLimit && !hull_failed) {
      if (!hull) {
        try {
          hull.emplace(all);
          hull_failed = *std::max_element(hull->seed_points().begin(), hull->seed_points().end()) >= t;
          if (!hull_failed) track({hull->seed_facets(), {}});
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DegenerateHull) throw;
          hull_failed = true;
        }
        if (hull_failed) hull.reset();
      }
      if (hull) {
        while (hull->prefix() < t) track(hull->insert_next());
        if (exposed == 0) {
          const UnitVec3 center = UnitVec3::adopt(caps.begin()->center);
          mx = {2.0 * kernels::nearest(prefix, center).dist, center};
          done = true;
        }
      }
    }
    if (!done) mx = max_gap_exact(prefix);
    out.push_back(make_report(t, running, mx));
  }
  return out;
}

std::vector<GapReport> prefix_gap_ratios(SolidKind kind, std::size_t n) {
  const auto pts = stream_points(kind, n);
  return prefix_gap_ratios(pts, n);
}

double max_ratio(std::span<const GapReport> reports) {
  double m = 0.0;
  for (const auto& r : reports) m = std::max(m, r.ratio);
  return m;
}

GapReport face_restricted_report(const SphTriangle& face, std::span<const UnitVec3> points) {
  const std::size_t count = points.size();
  std::size_t side = 1;
  unsigned depth = 0;
  while ((side + 1) * (side + 2) / 2 < count && depth < 20) {
    side *= 2;
    ++depth;
  }
  if ((side + 1) * (side + 2) / 2 != count || !is_power_of_two(side)) {
    throw Error(ErrorCode::IncompleteLevel, fmt::format("{} points is not a complete dissection level", count));
  }
  const auto expected = dissection_points(face, depth);
  const KdTree tree(points);
  std::vector<std::uint8_t> matched(count, 0);
  for (const auto& e : expected) {
    const auto hit = tree.nearest(e);
    if (hit.dist.value > tol::kConstructed || matched[hit.index]) {
      throw Error(ErrorCode::IncompleteLevel, fmt::format("points are not the depth-{} dissection of the face", depth));
    }
    matched[hit.index] = 1;
  }

  const UnitVec3 center = centroid(face);
  const MaxGap mx{2.0 * tree.nearest(center).dist, center};
  return make_report(count, min_gap(points), mx);
}

GapReport face_restricted_report(const SphTriangle& face, unsigned depth) {
  const auto points = dissection_points(face, depth);
  const UnitVec3 center = centroid(face);
  const MaxGap mx{2.0 * nearest_dist(points, center, nullptr), center};
  return make_report(points.size(), min_gap(points), mx);
}

Radians face_grid_oracle(const SphTriangle& face, std::span<const UnitVec3> points, std::size_t m) {
  require_samples(m);
  if (points.empty()) throw Error(ErrorCode::EmptySet, "grid oracle on an empty set");
  std::vector<UnitVec3> inside;
  for (const auto& s : fibonacci_lattice(m))
    if (contains(face, s)) inside.push_back(s);
  if (inside.empty()) throw Error(ErrorCode::EmptySet, "no lattice sample inside the face");
  return 2.0 * emptiest_indexed(inside, KdTree(points)).dist;
}

std::string to_json(const GapReport& r) {
  const std::string ratio = std::isfinite(r.ratio) ? fmt::format("{:.12g}", r.ratio) : "null";
  return fmt::format(R"({{"n":{},"rho_min":{:.12g},"min_pair":[{},{}],"rho_max":{:.12g},"center":[{:.12g},{:.12g},{:.12g}],"ratio":{}}})",
                     r.n, r.rho_min.value, r.min_pair[0], r.min_pair[1], r.rho_max.value, r.center.x(), r.center.y(),
                     r.center.z(), ratio);
}

}  // namespace sphtess
