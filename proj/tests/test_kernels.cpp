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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "penta/kernels.hpp"
#include "penta/measures.hpp"
#include "penta/penta_value.hpp"

using namespace penta;

TEST_CASE("grid layout is row-major with mu varying slowest") {
  // resolution 2: mu, nu in {0, 0.5, 1}; standard entropy is 1 - |mu - nu|.
  const std::vector<double> grid =
      measure_grid(GridMeasure::entropy, 2, TransformMode::standard);
  const std::vector<double> want = {1.0, 0.5, 0.0, 0.5, 1.0,
                                    0.5, 0.0, 0.5, 1.0};
  REQUIRE(grid.size() == 9);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    CHECK(grid[k] == doctest::Approx(want[k]).epsilon(1e-12));
  }
}

TEST_CASE("ambiguity grid matches the direct transform") {
  const std::vector<double> grid =
      measure_grid(GridMeasure::ambiguity, 4, TransformMode::standard);
  REQUIRE(grid.size() == 25);
  for (int im = 0; im <= 4; ++im) {
    for (int in = 0; in <= 4; ++in) {
      const PentaValue p = to_penta(BifuzzyValue(im / 4.0, in / 4.0),
                                    TransformMode::standard);
      CHECK(grid[static_cast<std::size_t>(im) * 5 + in] == p.i());
    }
  }
  // Corners carry no ambiguity; the center is pure ambiguity.
  CHECK(grid[0] == 0.0);
  CHECK(grid[4] == 0.0);
  CHECK(grid[12] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("syntropy and entropy grids are complementary") {
  const std::vector<double> e =
      measure_grid(GridMeasure::entropy, 16, TransformMode::balanced);
  const std::vector<double> g =
      measure_grid(GridMeasure::syntropy, 16, TransformMode::balanced);
  REQUIRE(e.size() == g.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    CHECK(e[k] + g[k] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("serial and parallel grids are bit-identical") {
  for (GridMeasure m :
       {GridMeasure::entropy, GridMeasure::syntropy, GridMeasure::ambiguity}) {
    for (TransformMode mode :
         {TransformMode::standard, TransformMode::balanced}) {
      const std::vector<double> serial =
          measure_grid(m, 257, mode, Execution::serial);
      const std::vector<double> parallel =
          measure_grid(m, 257, mode, Execution::parallel);
      CHECK(serial == parallel);
    }
  }
}

TEST_CASE("grid rejects non-positive resolutions") {
  CHECK_THROWS_AS(measure_grid(GridMeasure::entropy, 0,
                               TransformMode::standard),
                  std::invalid_argument);
  CHECK_THROWS_AS(measure_grid(GridMeasure::entropy, -3,
                               TransformMode::standard),
                  std::invalid_argument);
}

TEST_CASE("sweep counts violations and pins the first one") {
  const SweepResult r = sweep(10, 0.5, [](std::size_t k) {
    return k == 3 || k == 7 ? 0.75 : 0.1;
  });
  CHECK(r.checked == 10);
  CHECK(r.violations == 2);
  CHECK(r.worst == 0.75);
  CHECK(r.first_violation == 3);
  CHECK_FALSE(r.passed());

  const SweepResult clean = sweep(10, 0.5, [](std::size_t) { return 0.1; });
  CHECK(clean.passed());
  CHECK(clean.violations == 0);
  CHECK(clean.worst == 0.1);
  CHECK(clean.first_violation == SweepResult::npos);

  const SweepResult empty = sweep(0, 0.5, [](std::size_t) { return 1.0; });
  CHECK(empty.passed());
  CHECK(empty.checked == 0);
  CHECK(empty.worst == 0.0);
}

TEST_CASE("sweep treats NaN and exceptions as infinite magnitude") {
  const SweepResult nan_case = sweep(4, 1e9, [](std::size_t k) {
    return k == 2 ? std::numeric_limits<double>::quiet_NaN() : 0.0;
  });
  CHECK(nan_case.violations == 1);
  CHECK(nan_case.first_violation == 2);
  CHECK(std::isinf(nan_case.worst));

  const SweepResult throw_case = sweep(4, 1e9, [](std::size_t k) -> double {
    if (k == 1) throw std::runtime_error("boom");
    return 0.0;
  });
  CHECK(throw_case.violations == 1);
  CHECK(throw_case.first_violation == 1);
  CHECK(std::isinf(throw_case.worst));
}

TEST_CASE("serial and parallel sweeps agree exactly") {
  const auto magnitude = [](std::size_t k) {
    const double x = static_cast<double>(k % 101) / 100.0;
    return x * x - x + 0.21;
  };
  const SweepResult s = sweep(100000, 0.2, magnitude, Execution::serial);
  const SweepResult p = sweep(100000, 0.2, magnitude, Execution::parallel);
  CHECK(s.checked == p.checked);
  CHECK(s.violations == p.violations);
  CHECK(s.worst == p.worst);
  CHECK(s.first_violation == p.first_violation);
  CHECK(s.violations > 0);
}

TEST_CASE("kernel names round-trip") {
  CHECK(to_string(Execution::serial) == "serial");
  CHECK(to_string(Execution::parallel) == "parallel");
  CHECK(execution_from_string("serial") == Execution::serial);
  CHECK(execution_from_string("parallel") == Execution::parallel);
  CHECK_THROWS_AS(execution_from_string("gpu"), std::invalid_argument);

  for (GridMeasure m :
       {GridMeasure::entropy, GridMeasure::syntropy, GridMeasure::ambiguity}) {
    CHECK(grid_measure_from_string(to_string(m)) == m);
  }
  CHECK_THROWS_AS(grid_measure_from_string("variance"), std::invalid_argument);
}
