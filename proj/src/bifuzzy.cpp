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

#include "penta/bifuzzy.hpp"

#include <cmath>
#include <stdexcept>

#include "penta/format.hpp"

namespace penta {

const char* to_string(TransformMode mode) {
  return mode == TransformMode::standard ? "standard" : "balanced";
}

TransformMode transform_mode_from_string(const std::string& name) {
  if (name == "standard") return TransformMode::standard;
  if (name == "balanced") return TransformMode::balanced;
  throw std::invalid_argument("unknown transform mode: " + name);
}

BifuzzyValue::BifuzzyValue(double mu, double nu) : mu_(mu), nu_(nu) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw std::domain_error("mu out of range [0,1]: " + format_sig9(mu));
  }
  if (!(nu >= 0.0 && nu <= 1.0)) {
    throw std::domain_error("nu out of range [0,1]: " + format_sig9(nu));
  }
}

TauDelta tau_delta_standard(const BifuzzyValue& v) {
  return {v.mu() - v.nu(), v.mu() + v.nu() - 1.0, TransformMode::standard};
}

TauDelta tau_delta_balanced(const BifuzzyValue& v) {
  const double tau = v.mu() - v.nu();
  const double delta = v.mu() + v.nu() - 1.0;
  const double a = std::fabs(tau);
  const double b = std::fabs(delta);
  const double den = 1.0 - a * b;
  // a + b = max(|2mu-1|, |2nu-1|) <= 1, so ab <= 1/4 and den >= 3/4.
  if (!(den >= 0.75 - 1e-12)) {
    throw std::logic_error("balanced denominator below bound: " +
                           format_sig9(den));
  }
  return {(1.0 - b) / den * tau, (1.0 - a) / den * delta,
          TransformMode::balanced};
}

TauDelta tau_delta(const BifuzzyValue& v, TransformMode mode) {
  return mode == TransformMode::standard ? tau_delta_standard(v)
                                         : tau_delta_balanced(v);
}

double distance(const BifuzzyValue& v) {
  return std::fabs(tau_delta_balanced(v).tau);
}

const char* to_string(SetKind kind) {
  switch (kind) {
    case SetKind::fuzzy:
      return "fuzzy";
    case SetKind::intuitionistic:
      return "intuitionistic";
    case SetKind::paraconsistent:
      return "paraconsistent";
  }
  return "?";
}

Classification classify(const BifuzzyValue& v) {
  const double delta = v.mu() + v.nu() - 1.0;
  if (std::fabs(delta) <= kClassifyTolerance) {
    return {SetKind::fuzzy, 0.0};
  }
  if (delta < 0.0) {
    return {SetKind::intuitionistic, -delta};
  }
  return {SetKind::paraconsistent, delta};
}

}  // namespace penta
