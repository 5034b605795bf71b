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

#include "penta/penta_value.hpp"

#include <cmath>
#include <stdexcept>

#include "penta/format.hpp"

namespace penta {

namespace {

double snap_component(double x, const char* name) {
  if (x >= 0.0) return x;
  if (x >= -kComponentNoise) return 0.0;
  throw std::domain_error(std::string("component ") + name +
                          " negative beyond noise: " + format_sig9(x));
}

// Snaps values that drifted across a bound by no more than the noise
// window. Used only on derived quantities, never on ingested input.
double snap_range(double x) {
  if (x < 0.0 && x >= -kComponentNoise) return 0.0;
  if (x > 1.0 && x <= 1.0 + kComponentNoise) return 1.0;
  return x;
}

}  // namespace

PentaValue::PentaValue(double t, double c, double u, double f)
    : t_(snap_component(t, "t")),
      c_(snap_component(c, "c")),
      u_(snap_component(u, "u")),
      f_(snap_component(f, "f")) {
  const double sum = t_ + c_ + u_ + f_;
  if (sum > 1.0 + kComponentNoise) {
    throw std::domain_error("component sum above one: " + format_sig9(sum));
  }
}

double PentaValue::i() const {
  const double rest = 1.0 - t_ - c_ - u_ - f_;
  return rest > 0.0 ? rest : 0.0;
}

PentaValue to_penta(const TauDelta& td) {
  const double t = td.tau > 0.0 ? td.tau : 0.0;
  const double f = td.tau < 0.0 ? -td.tau : 0.0;
  const double c = td.delta > 0.0 ? td.delta : 0.0;
  const double u = td.delta < 0.0 ? -td.delta : 0.0;
  return PentaValue(t, c, u, f);
}

PentaValue to_penta(const BifuzzyValue& v, TransformMode mode) {
  return to_penta(tau_delta(v, mode));
}

BifuzzyValue from_penta(const PentaValue& p) {
  if (p.t() > 0.0 && p.f() > 0.0) {
    throw std::domain_error("no preimage: both t and f are positive");
  }
  if (p.c() > 0.0 && p.u() > 0.0) {
    throw std::domain_error("no preimage: both c and u are positive");
  }
  const double tau = p.t() - p.f();
  const double delta = p.c() - p.u();
  // Exact inputs give mu, nu in [0,1]; noisy but accepted inputs can
  // overshoot by at most a few kComponentNoise, which snap_range absorbs.
  const double mu = snap_range((1.0 + tau + delta) / 2.0);
  const double nu = snap_range((1.0 - tau + delta) / 2.0);
  return BifuzzyValue(mu, nu);
}

char to_char(CrispLabel label) {
  switch (label) {
    case CrispLabel::True:
      return 't';
    case CrispLabel::False:
      return 'f';
    case CrispLabel::Inconsistent:
      return 'c';
    case CrispLabel::Incomplete:
      return 'u';
    case CrispLabel::Ambiguous:
      return 'i';
  }
  return '?';
}

std::optional<CrispLabel> crisp_label_from_char(char ch) {
  switch (ch) {
    case 't':
      return CrispLabel::True;
    case 'f':
      return CrispLabel::False;
    case 'c':
      return CrispLabel::Inconsistent;
    case 'u':
      return CrispLabel::Incomplete;
    case 'i':
      return CrispLabel::Ambiguous;
    default:
      return std::nullopt;
  }
}

const std::array<CrispConstant, 5>& crisp_constants() {
  static const std::array<CrispConstant, 5> constants = {{
      {CrispLabel::True, PentaValue(1, 0, 0, 0)},
      {CrispLabel::False, PentaValue(0, 0, 0, 1)},
      {CrispLabel::Inconsistent, PentaValue(0, 1, 0, 0)},
      {CrispLabel::Incomplete, PentaValue(0, 0, 1, 0)},
      {CrispLabel::Ambiguous, PentaValue(0, 0, 0, 0)},
  }};
  return constants;
}

PentaValue crisp_value(CrispLabel label) {
  for (const CrispConstant& c : crisp_constants()) {
    if (c.label == label) return c.value;
  }
  throw std::logic_error("unreachable crisp label");
}

std::optional<CrispLabel> crisp_label_of(const PentaValue& p, double tol) {
  for (const CrispConstant& c : crisp_constants()) {
    if (std::fabs(p.t() - c.value.t()) <= tol &&
        std::fabs(p.c() - c.value.c()) <= tol &&
        std::fabs(p.u() - c.value.u()) <= tol &&
        std::fabs(p.f() - c.value.f()) <= tol) {
      return c.label;
    }
  }
  return std::nullopt;
}

}  // namespace penta
