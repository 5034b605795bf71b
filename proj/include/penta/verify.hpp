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

// Exhaustive self-check of the algebra. Each law is swept over a grid
// or a seeded random sample and reported with its worst residual. Laws
// that genuinely do not hold for a norm couple (idempotence and
// ambiguity preservation outside min_max) are reported as failures with
// a counterexample; that is the verifier doing its job, not a bug.

#ifndef PENTA_VERIFY_HPP
#define PENTA_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "penta/kernels.hpp"
#include "penta/norms.hpp"

namespace penta {

enum class LawStatus { pass, fail, info };

std::string to_string(LawStatus s);

struct LawResult {
  std::string id;
  /// Mode or couple the law was evaluated under, empty when global.
  std::string scope;
  LawStatus status = LawStatus::pass;
  double tolerance = 0.0;
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst = 0.0;
  /// First counterexample, rendered, when violations > 0.
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  int grid = 200;
  Execution exec = Execution::serial;
  std::vector<NormCouple> couples = {NormCouple::min_max()};
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<LawResult> laws;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Runs the full law suite in a fixed order. Deterministic for a given
/// seed: sample generation is serial and per-law, so the report is
/// byte-identical across executions and execution policies.
VerifyReport run_verification(const VerifyOptions& options);

/// Plain-text report, one line per law plus a header and a summary.
std::string render_text(const VerifyReport& report);

}  // namespace penta

#endif  // PENTA_VERIFY_HPP
