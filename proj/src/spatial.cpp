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

#include "sphtess/spatial.hpp"

#include <algorithm>
#include <cmath>

#include "sphtess/error.hpp"

namespace sphtess {

namespace {

constexpr std::uint32_t kLeafSize = 8;
// Added to the arc lower bound before pruning; covers rounding in both the
// box distance and sph_dist.
constexpr double kPruneMargin = 1e-12;

double coord(const Vec3& v, int axis) { return axis == 0 ? v.x : (axis == 1 ? v.y : v.z); }

double box_gap(double v, double lo, double hi) {
  if (v < lo) return lo - v;
  if (v > hi) return v - hi;
  return 0.0;
}

}  // namespace

KdTree::KdTree(std::span<const UnitVec3> points) : points_(points.begin(), points.end()) {
  order_.resize(points_.size());
  for (std::uint32_t i = 0; i < order_.size(); ++i) order_[i] = i;
  if (!points_.empty()) {
    nodes_.reserve(2 * points_.size() / kLeafSize + 2);
    build(0, static_cast<std::uint32_t>(points_.size()));
  }
}

std::int32_t KdTree::build(std::uint32_t begin, std::uint32_t end) {
  Node node;
  node.begin = begin;
  node.end = end;
  node.lo = points_[order_[begin]].vec();
  node.hi = node.lo;
  for (std::uint32_t k = begin; k < end; ++k) {
    const Vec3& p = points_[order_[k]].vec();
    node.lo = {std::min(node.lo.x, p.x), std::min(node.lo.y, p.y), std::min(node.lo.z, p.z)};
    node.hi = {std::max(node.hi.x, p.x), std::max(node.hi.y, p.y), std::max(node.hi.z, p.z)};
  }
  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(node);
  if (end - begin <= kLeafSize) return id;

  const Vec3 extent = node.hi - node.lo;
  int axis = 0;
  if (extent.y > extent.x && extent.y >= extent.z) axis = 1;
  else if (extent.z > extent.x && extent.z > extent.y) axis = 2;
  const std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](std::uint32_t a, std::uint32_t b) {
                     const double ca = coord(points_[a].vec(), axis);
                     const double cb = coord(points_[b].vec(), axis);
                     return ca != cb ? ca < cb : a < b;
                   });
  const std::int32_t l = build(begin, mid);
  const std::int32_t r = build(mid, end);
  nodes_[id].left = l;
  nodes_[id].right = r;
  return id;
}

void KdTree::search(std::int32_t id, const UnitVec3& q, std::size_t exclude, kernels::NearestHit& best) const {
  const Node& node = nodes_[id];
  const Vec3& v = q.vec();
  const double gx = box_gap(v.x, node.lo.x, node.hi.x);
  const double gy = box_gap(v.y, node.lo.y, node.hi.y);
  const double gz = box_gap(v.z, node.lo.z, node.hi.z);
  const double chord = std::sqrt(gx * gx + gy * gy + gz * gz);
  const double bound = 2.0 * std::asin(std::min(1.0, chord / 2.0));
  if (bound > best.dist.value + kPruneMargin) return;

  if (node.left < 0) {
    for (std::uint32_t k = node.begin; k < node.end; ++k) {
      const std::size_t i = order_[k];
      if (i == exclude) continue;
      const Radians d = sph_dist(q, points_[i]);
      if (d.value < best.dist.value || (d.value == best.dist.value && i < best.index)) best = {d, i};
    }
    return;
  }
  // Visit the child whose box is nearer first.
  auto gap2 = [&](const Node& c) {
    const double a = box_gap(v.x, c.lo.x, c.hi.x);
    const double b = box_gap(v.y, c.lo.y, c.hi.y);
    const double d = box_gap(v.z, c.lo.z, c.hi.z);
    return a * a + b * b + d * d;
  };
  std::int32_t first = node.left;
  std::int32_t second = node.right;
  if (gap2(nodes_[second]) < gap2(nodes_[first])) std::swap(first, second);
  search(first, q, exclude, best);
  search(second, q, exclude, best);
}

kernels::NearestHit KdTree::nearest(const UnitVec3& q, std::size_t exclude) const {
  kernels::NearestHit best{Radians{std::numeric_limits<double>::infinity()}, npos};
  if (!nodes_.empty()) search(0, q, exclude, best);
  if (best.index == npos) throw Error(ErrorCode::EmptySet, "no eligible point for a nearest query");
  return best;
}

kernels::PairHit KdTree::closest_pair() const {
  if (points_.size() < 2) throw Error(ErrorCode::TooFewPoints, "a closest pair needs two points");
  kernels::PairHit best{Radians{std::numeric_limits<double>::infinity()}, 0, 1};
  for (std::size_t a = 0; a < points_.size(); ++a) {
    const kernels::NearestHit hit = nearest(points_[a], a);
    const kernels::PairHit pair{hit.dist, std::min(a, hit.index), std::max(a, hit.index)};
    if (kernels::pair_less(pair, best)) best = pair;
  }
  return best;
}

}  // namespace sphtess
