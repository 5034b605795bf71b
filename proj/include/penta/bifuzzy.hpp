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

// Bifuzzy value model: a pair (mu, nu) of fully independent membership and
// non-membership degrees, the signed (tau, delta) coordinates derived from
// it, and the fuzzy/intuitionistic/paraconsistent classification.

#ifndef PENTA_BIFUZZY_HPP
#define PENTA_BIFUZZY_HPP

#include <compare>
#include <string>

namespace penta {

/// Which (tau, delta) coordinate transform to apply.
enum class TransformMode { standard, balanced };

const char* to_string(TransformMode mode);
TransformMode transform_mode_from_string(const std::string& name);

/// A membership/non-membership pair. Both degrees live in [0,1] and are
/// totally independent: mu + nu may be below, equal to, or above 1.
/// Construction rejects out-of-range inputs; nothing is ever clamped.
class BifuzzyValue {
 public:
  BifuzzyValue(double mu, double nu);

  double mu() const { return mu_; }
  double nu() const { return nu_; }

  friend bool operator==(const BifuzzyValue&, const BifuzzyValue&) = default;

 private:
  double mu_;
  double nu_;
};

/// Signed coordinates of a bifuzzy value.
///   tau   in [-1,1]: net truth, positive leans true.
///   delta in [-1,1]: definedness, positive means overdefined (inconsistent),
///                    negative means underdefined (incomplete).
/// Invariant: |tau| + |delta| <= 1 for both modes.
struct TauDelta {
  double tau;
  double delta;
  TransformMode mode;
};

/// tau = mu - nu, delta = mu + nu - 1.
TauDelta tau_delta_standard(const BifuzzyValue& v);

/// The rebalanced coordinates: with a = |mu-nu| and b = |mu+nu-1|,
///   tau   = (1-b)/(1-ab) * (mu-nu)
///   delta = (1-a)/(1-ab) * (mu+nu-1)
/// The denominator is always >= 3/4 (a+b <= 1 forces ab <= 1/4); this bound
/// is checked and a violation throws std::logic_error.
TauDelta tau_delta_balanced(const BifuzzyValue& v);

TauDelta tau_delta(const BifuzzyValue& v, TransformMode mode);

/// Separation between mu and nu, rescaled by the definedness:
/// a(1-b)/(1-ab). Equals |tau_delta_balanced(v).tau|; zero iff mu == nu.
double distance(const BifuzzyValue& v);

enum class SetKind { fuzzy, intuitionistic, paraconsistent };

const char* to_string(SetKind kind);

/// Classification of a value by the sign of mu + nu - 1.
///   fuzzy           : mu + nu = 1 (index 0)
///   intuitionistic  : mu + nu < 1 (index = hesitation 1 - mu - nu)
///   paraconsistent  : mu + nu > 1 (index = contradiction mu + nu - 1)
struct Classification {
  SetKind kind;
  double index;
};

/// Band around mu+nu-1 == 0 inside which a value counts as fuzzy.
/// Classification is presentational; no measure branches on it.
inline constexpr double kClassifyTolerance = 1e-9;

Classification classify(const BifuzzyValue& v);

}  // namespace penta

#endif  // PENTA_BIFUZZY_HPP
