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

// Five-valued representation: the nonnegative split of (tau, delta) into
// indices of truth, inconsistency, incompleteness and falsity, with the
// ambiguity index derived so the five always partition unity.

#ifndef PENTA_PENTA_VALUE_HPP
#define PENTA_PENTA_VALUE_HPP

#include <array>
#include <optional>

#include "penta/bifuzzy.hpp"

namespace penta {

/// Rounding-noise window for component validation. Components below zero by
/// no more than this are snapped to exact zero; anything worse throws.
inline constexpr double kComponentNoise = 1e-12;

/// The (t, c, u, f) vector. Component order is fixed project-wide:
/// truth, inconsistency, incompleteness, falsity. Ambiguity i is never
/// stored; it is always derived as 1 - t - c - u - f.
///
/// Valid states: every component >= 0 and t + c + u + f <= 1. Construction
/// enforces this (within kComponentNoise) and throws std::domain_error
/// otherwise -- union/intersection results are validated through here, so a
/// norm couple that escapes the valid region surfaces loudly instead of
/// being clamped.
class PentaValue {
 public:
  /// The all-zero vector (pure ambiguity, i = 1).
  PentaValue() = default;

  PentaValue(double t, double c, double u, double f);

  double t() const { return t_; }
  double c() const { return c_; }
  double u() const { return u_; }
  double f() const { return f_; }

  /// Derived ambiguity index, floored at zero against rounding noise.
  double i() const;

  friend bool operator==(const PentaValue&, const PentaValue&) = default;

 private:
  double t_ = 0.0;
  double c_ = 0.0;
  double u_ = 0.0;
  double f_ = 0.0;
};

/// Split (tau, delta) into the five indices:
///   t = max(tau, 0), f = max(-tau, 0), c = max(delta, 0), u = max(-delta, 0).
/// Outputs satisfy t*f = 0 and c*u = 0 exactly.
PentaValue to_penta(const TauDelta& td);
PentaValue to_penta(const BifuzzyValue& v, TransformMode mode);

/// Inverse of the standard-mode pipeline: tau = t - f, delta = c - u,
/// mu = (1 + tau + delta) / 2, nu = (1 - tau + delta) / 2.
/// Defined only where the preimage is a single point: throws
/// std::domain_error when t*f > 0 or c*u > 0. There is no balanced-mode
/// inverse.
BifuzzyValue from_penta(const PentaValue& p);

/// The five crisp logical constants.
enum class CrispLabel { True, False, Inconsistent, Incomplete, Ambiguous };

/// Single-letter form: t, f, c, u, i.
char to_char(CrispLabel label);
std::optional<CrispLabel> crisp_label_from_char(char ch);

struct CrispConstant {
  CrispLabel label;
  PentaValue value;
};

/// The five constants in the order T, F, C, U, I:
///   T=(1,0,0,0)  F=(0,0,0,1)  C=(0,1,0,0)  U=(0,0,1,0)  I=(0,0,0,0).
const std::array<CrispConstant, 5>& crisp_constants();

PentaValue crisp_value(CrispLabel label);

/// Component tolerance for recognising a vector as one of the five
/// constants: 0/1 within 1e-9. Piecewise-linear couples keep crisp inputs
/// exact; the tolerance only guards frank(s) rounding.
inline constexpr double kCrispTolerance = 1e-9;

/// Maps a vector back to its crisp label, or nullopt if it is not within
/// kCrispTolerance of any constant.
std::optional<CrispLabel> crisp_label_of(const PentaValue& p,
                                         double tol = kCrispTolerance);

}  // namespace penta

#endif  // PENTA_PENTA_VALUE_HPP
