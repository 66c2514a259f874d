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

// Serial versus OpenMP distance kernels.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "sphtess/gapmetrics.hpp"
#include "sphtess/kernels.hpp"
#include "sphtess/spatial.hpp"
#include "sphtess/tessellate.hpp"

using namespace sphtess;

namespace {

const std::vector<UnitVec3>& stream(std::size_t n) {
  static std::vector<UnitVec3> pts = stream_points(SolidKind::icosahedron, 40962);
  static std::vector<std::vector<UnitVec3>> cache(40963);
  if (cache[n].empty()) cache[n].assign(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(n));
  return cache[n];
}

void BM_closest_pair_serial(benchmark::State& st) {
  const auto& pts = stream(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::closest_pair(pts));
}

void BM_closest_pair_omp(benchmark::State& st) {
  const auto& pts = stream(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::omp::closest_pair(pts));
  st.counters["threads"] = omp_get_max_threads();
}

void BM_closest_pair_kdtree(benchmark::State& st) {
  const auto& pts = stream(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(KdTree(pts).closest_pair());
}

void BM_emptiest_serial(benchmark::State& st) {
  const auto samples = fibonacci_lattice(static_cast<std::size_t>(st.range(0)));
  const auto& pts = stream(642);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::emptiest_sample(samples, pts));
}

void BM_emptiest_omp(benchmark::State& st) {
  const auto samples = fibonacci_lattice(static_cast<std::size_t>(st.range(0)));
  const auto& pts = stream(642);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::omp::emptiest_sample(samples, pts));
}

}  // namespace

BENCHMARK(BM_closest_pair_serial)->Arg(2562)->Arg(10242)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closest_pair_omp)->Arg(2562)->Arg(10242)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closest_pair_kdtree)->Arg(2562)->Arg(10242)->Arg(40962)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_emptiest_serial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_emptiest_omp)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
