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

#include "penta/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "penta/measures.hpp"
#include "penta/penta_value.hpp"

namespace penta {

std::string to_string(Execution exec) {
  return exec == Execution::serial ? "serial" : "parallel";
}

Execution execution_from_string(std::string_view text) {
  if (text == "serial") return Execution::serial;
  if (text == "parallel") return Execution::parallel;
  throw std::invalid_argument("unknown execution policy: " +
                              std::string(text));
}

std::string to_string(GridMeasure m) {
  switch (m) {
    case GridMeasure::entropy:
      return "entropy";
    case GridMeasure::syntropy:
      return "syntropy";
    case GridMeasure::ambiguity:
      return "ambiguity";
  }
  return "?";
}

GridMeasure grid_measure_from_string(std::string_view text) {
  if (text == "entropy") return GridMeasure::entropy;
  if (text == "syntropy") return GridMeasure::syntropy;
  if (text == "ambiguity") return GridMeasure::ambiguity;
  throw std::invalid_argument("unknown grid measure: " + std::string(text));
}

namespace {

double cell_value(GridMeasure m, int resolution, TransformMode mode,
                  std::int64_t idx) {
  const int n = resolution + 1;
  const double mu = static_cast<double>(idx / n) / resolution;
  const double nu = static_cast<double>(idx % n) / resolution;
  const PentaValue p = to_penta(BifuzzyValue(mu, nu), mode);
  switch (m) {
    case GridMeasure::entropy:
      return entropy(p).scalar;
    case GridMeasure::syntropy:
      return syntropy(p).scalar;
    case GridMeasure::ambiguity:
      return p.i();
  }
  return 0.0;
}

}  // namespace

std::vector<double> measure_grid(GridMeasure m, int resolution,
                                 TransformMode mode, Execution exec) {
  if (resolution < 1) {
    throw std::invalid_argument("grid resolution must be >= 1");
  }
  const std::int64_t cells =
      static_cast<std::int64_t>(resolution + 1) * (resolution + 1);
  std::vector<double> out(static_cast<std::size_t>(cells));
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < cells; ++idx) {
      out[static_cast<std::size_t>(idx)] = cell_value(m, resolution, mode, idx);
    }
  } else {
    for (std::int64_t idx = 0; idx < cells; ++idx) {
      out[static_cast<std::size_t>(idx)] = cell_value(m, resolution, mode, idx);
    }
  }
  return out;
}

namespace {

// NaN would compare false against any tolerance; promote it (and a
// throwing callback) to +inf so it always registers as a violation.
double safe_magnitude(const std::function<double(std::size_t)>& magnitude,
                      std::size_t idx) {
  double value;
  try {
    value = magnitude(idx);
  } catch (...) {
    return std::numeric_limits<double>::infinity();
  }
  if (std::isnan(value)) return std::numeric_limits<double>::infinity();
  return value;
}

}  // namespace

SweepResult sweep(std::size_t count, double tolerance,
                  const std::function<double(std::size_t)>& magnitude,
                  Execution exec) {
  SweepResult result;
  result.checked = count;
  const std::int64_t n = static_cast<std::int64_t>(count);
  if (exec == Execution::parallel) {
#pragma omp parallel
    {
      SweepResult local;
#pragma omp for nowait schedule(static)
      for (std::int64_t idx = 0; idx < n; ++idx) {
        const double value =
            safe_magnitude(magnitude, static_cast<std::size_t>(idx));
        if (value > local.worst) local.worst = value;
        if (value > tolerance) {
          ++local.violations;
          if (static_cast<std::size_t>(idx) < local.first_violation) {
            local.first_violation = static_cast<std::size_t>(idx);
          }
        }
      }
      // Sum, max and min-index merges commute, so the merge order that
      // the critical section happens to take never changes the result.
#pragma omp critical
      {
        result.violations += local.violations;
        if (local.worst > result.worst) result.worst = local.worst;
        if (local.first_violation < result.first_violation) {
          result.first_violation = local.first_violation;
        }
      }
    }
  } else {
    for (std::int64_t idx = 0; idx < n; ++idx) {
      const double value =
          safe_magnitude(magnitude, static_cast<std::size_t>(idx));
      if (value > result.worst) result.worst = value;
      if (value > tolerance) {
        ++result.violations;
        if (static_cast<std::size_t>(idx) < result.first_violation) {
          result.first_violation = static_cast<std::size_t>(idx);
        }
      }
    }
  }
  return result;
}

}  // namespace penta
