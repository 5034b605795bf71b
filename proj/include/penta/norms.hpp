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

#ifndef PENTA_NORMS_HPP
#define PENTA_NORMS_HPP

#include <string>
#include <string_view>

namespace penta {

/// A dual t-norm / t-conorm pair satisfying T(a,b) + S(a,b) = a + b.
/// The parametric member is
///   T_s(a,b) = log_s(1 + (s^a - 1)(s^b - 1)/(s - 1)),  s > 0, s != 1,
/// whose limit cases are the three named couples:
///   s -> 0    min / max
///   s -> 1    product / probabilistic sum
///   s -> inf  Lukasiewicz
/// The t-conorm is always the dual: S(a,b) = 1 - T(1-a, 1-b).
class NormCouple {
 public:
  enum class Family { min_max, product_probsum, lukasiewicz, frank };

  static NormCouple min_max() { return NormCouple(Family::min_max, 0.0); }
  static NormCouple product_probsum() {
    return NormCouple(Family::product_probsum, 0.0);
  }
  static NormCouple lukasiewicz() {
    return NormCouple(Family::lukasiewicz, 0.0);
  }
  /// Throws std::domain_error unless s > 0 and s != 1.
  static NormCouple frank(double s);

  double tnorm(double a, double b) const;
  double tconorm(double a, double b) const;

  Family family() const { return family_; }
  /// The frank parameter; meaningful only when family() == Family::frank.
  double parameter() const { return s_; }

  /// Canonical name: "min_max", "product_probsum", "lukasiewicz",
  /// "frank(<s>)".
  std::string name() const;

  /// Accepts the canonical names plus the short aliases min, minmax,
  /// product, prod, luka, and frank:<s> / frank(<s>). Throws
  /// std::invalid_argument on anything else.
  static NormCouple parse(std::string_view text);

  friend bool operator==(const NormCouple& a, const NormCouple& b) {
    return a.family_ == b.family_ && a.s_ == b.s_;
  }

 private:
  NormCouple(Family family, double s);

  Family family_;
  double s_;
  double log_s_ = 0.0;    // ln(s), cached for the frank form
  double expm1_ls_ = 0.0; // expm1(ln s) = s - 1
};

}  // namespace penta

#endif  // PENTA_NORMS_HPP
