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

#include <limits>

#include "sphtess/constants.hpp"
#include "sphtess/kernels.hpp"

namespace sphtess::kernels::serial {

PairHit closest_pair(std::span<const UnitVec3> points) {
  const std::size_t n = points.size();
  double best_dot = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) best_dot = std::max(best_dot, dot(points[i], points[j]));

  // Any pair whose distance ties or beats the best is within the slack.
  const double cut = best_dot - tol::kDotSlack;
  PairHit best{Radians{std::numeric_limits<double>::infinity()}, 0, 1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dot(points[i], points[j]) < cut) continue;
      const PairHit hit{sph_dist(points[i], points[j]), i, j};
      if (pair_less(hit, best)) best = hit;
    }
  }
  return best;
}

NearestHit nearest(std::span<const UnitVec3> points, const UnitVec3& q) {
  double best_dot = -std::numeric_limits<double>::infinity();
  for (const auto& p : points) best_dot = std::max(best_dot, dot(p, q));
  const double cut = best_dot - tol::kDotSlack;
  NearestHit best{Radians{std::numeric_limits<double>::infinity()}, 0};
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (dot(points[i], q) < cut) continue;
    const Radians d = sph_dist(q, points[i]);
    if (d.value < best.dist.value) best = {d, i};
  }
  return best;
}

NearestHit farthest_candidate(std::span<const UnitVec3> candidates, std::span<const UnitVec3> points) {
  NearestHit best{Radians{-1.0}, 0};
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const NearestHit hit{nearest(points, candidates[c]).dist, c};
    if (farther_candidate(hit, candidates[c], best, candidates[best.index])) best = hit;
  }
  return best;
}

NearestHit emptiest_sample(std::span<const UnitVec3> samples, std::span<const UnitVec3> points) {
  double lowest = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& p : points) m = std::max(m, dot(samples[s], p));
    if (m < lowest) {
      lowest = m;
      arg = s;
    }
  }
  return {nearest(points, samples[arg]).dist, arg};
}

}  // namespace sphtess::kernels::serial
