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

#include <algorithm>
#include <cstdint>
#include <limits>

#include "sphtess/constants.hpp"
#include "sphtess/kernels.hpp"

namespace sphtess::kernels::omp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this many dot products the serial loop is faster than a fork.
constexpr std::size_t kParallelWork = 1u << 14;

}  // namespace

PairHit closest_pair(std::span<const UnitVec3> points) {
  const auto n = static_cast<std::int64_t>(points.size());
  if (points.size() * points.size() / 2 < kParallelWork) return serial::closest_pair(points);

  double best_dot = kNegInf;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best_dot)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) best_dot = std::max(best_dot, dot(points[i], points[j]));
  }

  const double cut = best_dot - tol::kDotSlack;
  PairHit best{Radians{kInf}, 0, 1};
#pragma omp parallel
  {
    PairHit local{Radians{kInf}, 0, 1};
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) {
        if (dot(points[i], points[j]) < cut) continue;
        const PairHit hit{sph_dist(points[i], points[j]), static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
        if (pair_less(hit, local)) local = hit;
      }
    }
#pragma omp critical(sphtess_closest_pair)
    if (pair_less(local, best)) best = local;
  }
  return best;
}

NearestHit nearest(std::span<const UnitVec3> points, const UnitVec3& q) {
  const auto n = static_cast<std::int64_t>(points.size());
  if (points.size() < kParallelWork) return serial::nearest(points, q);

  double best_dot = kNegInf;
#pragma omp parallel for reduction(max : best_dot)
  for (std::int64_t i = 0; i < n; ++i) best_dot = std::max(best_dot, dot(points[i], q));

  const double cut = best_dot - tol::kDotSlack;
  NearestHit best{Radians{kInf}, 0};
#pragma omp parallel
  {
    NearestHit local{Radians{kInf}, 0};
#pragma omp for nowait
    for (std::int64_t i = 0; i < n; ++i) {
      if (dot(points[i], q) < cut) continue;
      const Radians d = sph_dist(q, points[i]);
      if (d.value < local.dist.value) local = {d, static_cast<std::size_t>(i)};
    }
#pragma omp critical(sphtess_nearest)
    if (local.dist.value < best.dist.value || (local.dist.value == best.dist.value && local.index < best.index)) {
      best = local;
    }
  }
  return best;
}

NearestHit farthest_candidate(std::span<const UnitVec3> candidates, std::span<const UnitVec3> points) {
  const auto m = static_cast<std::int64_t>(candidates.size());
  if (candidates.size() * points.size() < kParallelWork) return serial::farthest_candidate(candidates, points);

  NearestHit best{Radians{-1.0}, 0};
#pragma omp parallel
  {
    NearestHit local{Radians{-1.0}, 0};
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t c = 0; c < m; ++c) {
      const NearestHit hit{serial::nearest(points, candidates[c]).dist, static_cast<std::size_t>(c)};
      if (farther_candidate(hit, candidates[c], local, candidates[local.index])) local = hit;
    }
#pragma omp critical(sphtess_farthest_candidate)
    if (farther_candidate(local, candidates[local.index], best, candidates[best.index])) best = local;
  }
  return best;
}

NearestHit emptiest_sample(std::span<const UnitVec3> samples, std::span<const UnitVec3> points) {
  const auto m = static_cast<std::int64_t>(samples.size());
  if (samples.size() * points.size() < kParallelWork) return serial::emptiest_sample(samples, points);

  double lowest = kInf;
  std::size_t arg = 0;
#pragma omp parallel
  {
    double local_low = kInf;
    std::size_t local_arg = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 0; s < m; ++s) {
      double best = kNegInf;
      for (const auto& p : points) best = std::max(best, dot(samples[s], p));
      if (best < local_low) {
        local_low = best;
        local_arg = static_cast<std::size_t>(s);
      }
    }
#pragma omp critical(sphtess_emptiest_sample)
    if (local_low < lowest || (local_low == lowest && local_arg < arg)) {
      lowest = local_low;
      arg = local_arg;
    }
  }
  return {serial::nearest(points, samples[arg]).dist, arg};
}

}  // namespace sphtess::kernels::omp
