// Copyright 2026 The Pentalogic Authors. All Rights Reserved.
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

// Serial versus OpenMP timing for the two bulk kernels. The parallel
// path must win on large grids while producing bit-identical output;
// the identity itself is asserted in the test suite, not here.

#include <cmath>
#include <cstddef>

#include <benchmark/benchmark.h>

#include "penta/bifuzzy.hpp"
#include "penta/kernels.hpp"
#include "penta/measures.hpp"
#include "penta/penta_value.hpp"

namespace {

void BM_measure_grid(benchmark::State& state, penta::Execution exec) {
  const int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::vector<double> grid = penta::measure_grid(
        penta::GridMeasure::entropy, resolution,
        penta::TransformMode::balanced, exec);
    benchmark::DoNotOptimize(grid.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(resolution + 1) *
                          (resolution + 1));
}

double partition_residual(std::size_t idx, int resolution) {
  const std::size_t n = static_cast<std::size_t>(resolution) + 1;
  const double mu = static_cast<double>(idx / n) / resolution;
  const double nu = static_cast<double>(idx % n) / resolution;
  const penta::PentaValue p = penta::to_penta(
      penta::BifuzzyValue(mu, nu), penta::TransformMode::balanced);
  return std::fabs(p.t() + p.c() + p.u() + p.f() + p.i() - 1.0);
}

void BM_sweep(benchmark::State& state, penta::Execution exec) {
  const int resolution = static_cast<int>(state.range(0));
  const std::size_t count =
      static_cast<std::size_t>(resolution + 1) * (resolution + 1);
  for (auto _ : state) {
    penta::SweepResult r = penta::sweep(
        count, 1e-12,
        [resolution](std::size_t idx) {
          return partition_residual(idx, resolution);
        },
        exec);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(count));
}

}  // namespace

BENCHMARK_CAPTURE(BM_measure_grid, serial, penta::Execution::serial)
    ->Arg(256)
    ->Arg(1024);
BENCHMARK_CAPTURE(BM_measure_grid, parallel, penta::Execution::parallel)
    ->Arg(256)
    ->Arg(1024);
BENCHMARK_CAPTURE(BM_sweep, serial, penta::Execution::serial)
    ->Arg(256)
    ->Arg(1024);
BENCHMARK_CAPTURE(BM_sweep, parallel, penta::Execution::parallel)
    ->Arg(256)
    ->Arg(1024);

BENCHMARK_MAIN();
