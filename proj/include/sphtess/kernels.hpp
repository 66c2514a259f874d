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

// Data-parallel distance kernels.
//
// Each kernel has a serial reference implementation and an OpenMP one with
// identical results, bit for bit, independent of the thread count: every
// reduction resolves ties with a fixed key (smallest index, or smallest
// coordinates in lexicographic order) instead of relying on schedule order.
// The unqualified names forward to the OpenMP versions.

#include <cstddef>
#include <span>

#include "sphtess/sphgeom.hpp"

namespace sphtess::kernels {

struct PairHit {
  Radians dist;
  std::size_t i = 0;  // i < j
  std::size_t j = 0;
};

struct NearestHit {
  Radians dist;
  std::size_t index = 0;
};

// Closest pair by great-circle distance; the lexicographically smallest (i, j)
// among equal minima. Requires at least two points.
namespace serial {
PairHit closest_pair(std::span<const UnitVec3> points);
// Nearest point to q; smallest index among equal minima. Requires a non-empty
// set.
NearestHit nearest(std::span<const UnitVec3> points, const UnitVec3& q);
// Candidate with the largest distance to its nearest point; among equal
// maxima the one with lexicographically smallest coordinates. index refers to
// candidates.
NearestHit farthest_candidate(std::span<const UnitVec3> candidates, std::span<const UnitVec3> points);
// Sample whose nearest point is farthest, judged by the largest dot product
// only (no exact tie handling; meant for sampling oracles). dist is the exact
// distance from that sample to its nearest point.
NearestHit emptiest_sample(std::span<const UnitVec3> samples, std::span<const UnitVec3> points);
}  // namespace serial

namespace omp {
PairHit closest_pair(std::span<const UnitVec3> points);
NearestHit nearest(std::span<const UnitVec3> points, const UnitVec3& q);
NearestHit farthest_candidate(std::span<const UnitVec3> candidates, std::span<const UnitVec3> points);
NearestHit emptiest_sample(std::span<const UnitVec3> samples, std::span<const UnitVec3> points);
}  // namespace omp

using omp::closest_pair;
using omp::emptiest_sample;
using omp::farthest_candidate;
using omp::nearest;

// Shared comparison keys.
inline bool pair_less(const PairHit& a, const PairHit& b) {
  if (a.dist.value != b.dist.value) return a.dist.value < b.dist.value;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

inline bool farther_candidate(const NearestHit& a, const UnitVec3& ca, const NearestHit& b, const UnitVec3& cb) {
  if (a.dist.value != b.dist.value) return a.dist.value > b.dist.value;
  return lex_less(ca.vec(), cb.vec());
}

}  // namespace sphtess::kernels
