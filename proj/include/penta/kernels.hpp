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

// Bulk evaluation kernels. Every kernel has a serial and an OpenMP
// parallel path; both must produce bit-identical results, which the
// kernels guarantee by keeping cells independent and reducing only with
// order-insensitive operations (integer sums, max, min-index).

#ifndef PENTA_KERNELS_HPP
#define PENTA_KERNELS_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "penta/bifuzzy.hpp"

namespace penta {

enum class Execution { serial, parallel };

std::string to_string(Execution exec);
Execution execution_from_string(std::string_view text);

enum class GridMeasure { entropy, syntropy, ambiguity };

std::string to_string(GridMeasure m);
GridMeasure grid_measure_from_string(std::string_view text);

/// Evaluates a measure on the uniform (resolution+1)^2 lattice of
/// (mu, nu) pairs, mu = row/resolution, nu = col/resolution. The result
/// is row-major with mu varying slowest. resolution must be >= 1.
std::vector<double> measure_grid(GridMeasure m, int resolution,
                                 TransformMode mode,
                                 Execution exec = Execution::serial);

struct SweepResult {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t checked = 0;
  std::size_t violations = 0;
  /// Largest magnitude seen over all samples, violating or not.
  double worst = 0.0;
  /// Smallest index whose magnitude exceeded the tolerance, or npos.
  std::size_t first_violation = npos;

  bool passed() const { return violations == 0; }
};

/// Evaluates magnitude(0..count-1) and counts samples whose magnitude
/// exceeds tolerance. The callback must treat the index as its only
/// state; a callback that throws is recorded as an infinite magnitude
/// so exceptions never cross the parallel region.
SweepResult sweep(std::size_t count, double tolerance,
                  const std::function<double(std::size_t)>& magnitude,
                  Execution exec = Execution::serial);

}  // namespace penta

#endif  // PENTA_KERNELS_HPP
