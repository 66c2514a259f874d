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

// kd-tree over unit vectors for exact nearest-neighbour queries.
//
// Pruning works on chord lengths with a small arc margin, so a query returns
// the same point as a linear scan by great-circle distance: the minimum
// sph_dist, and the smallest index among equal minima.

#include <array>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "sphtess/kernels.hpp"
#include "sphtess/sphgeom.hpp"

namespace sphtess {

class KdTree {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit KdTree(std::span<const UnitVec3> points);

  std::size_t size() const { return points_.size(); }

  // Nearest point to q, ignoring index `exclude`. Throws EmptySet if no
  // point is eligible.
  kernels::NearestHit nearest(const UnitVec3& q, std::size_t exclude = npos) const;

  // Closest pair, identical to kernels::closest_pair.
  kernels::PairHit closest_pair() const;

 private:
  struct Node {
    Vec3 lo;
    Vec3 hi;
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
    std::int32_t left = -1;
    std::int32_t right = -1;
  };

  std::int32_t build(std::uint32_t begin, std::uint32_t end);
  void search(std::int32_t node, const UnitVec3& q, std::size_t exclude, kernels::NearestHit& best) const;

  std::vector<UnitVec3> points_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
};

}  // namespace sphtess
