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

#include "penta/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "penta/format.hpp"

namespace penta {

NormCouple::NormCouple(Family family, double s) : family_(family), s_(s) {
  if (family_ == Family::frank) {
    log_s_ = std::log(s_);
    expm1_ls_ = s_ - 1.0;
  }
}

NormCouple NormCouple::frank(double s) {
  if (!(s > 0.0) || s == 1.0) {
    throw std::domain_error("frank parameter must be positive and not 1: " +
                            format_sig9(s));
  }
  return NormCouple(Family::frank, s);
}

double NormCouple::tnorm(double a, double b) const {
  switch (family_) {
    case Family::min_max:
      return std::min(a, b);
    case Family::product_probsum:
      return a * b;
    case Family::lukasiewicz:
      return std::max(a + b - 1.0, 0.0);
    case Family::frank: {
      // log_s(1 + (s^a-1)(s^b-1)/(s-1)) via expm1/log1p so values near 0
      // keep full precision for any s on either side of 1.
      const double num = std::expm1(a * log_s_) * std::expm1(b * log_s_);
      return std::log1p(num / expm1_ls_) / log_s_;
    }
  }
  return 0.0;
}

double NormCouple::tconorm(double a, double b) const {
  switch (family_) {
    case Family::min_max:
      return std::max(a, b);
    case Family::product_probsum:
      return a + b - a * b;
    case Family::lukasiewicz:
      return std::min(a + b, 1.0);
    case Family::frank:
      return 1.0 - tnorm(1.0 - a, 1.0 - b);
  }
  return 0.0;
}

std::string NormCouple::name() const {
  switch (family_) {
    case Family::min_max:
      return "min_max";
    case Family::product_probsum:
      return "product_probsum";
    case Family::lukasiewicz:
      return "lukasiewicz";
    case Family::frank:
      return "frank(" + format_sig9(s_) + ")";
  }
  return "?";
}

NormCouple NormCouple::parse(std::string_view text) {
  if (text == "min_max" || text == "min" || text == "minmax" ||
      text == "max") {
    return min_max();
  }
  if (text == "product_probsum" || text == "product" || text == "prod") {
    return product_probsum();
  }
  if (text == "lukasiewicz" || text == "luka") {
    return lukasiewicz();
  }
  std::string_view arg;
  if (text.starts_with("frank:")) {
    arg = text.substr(6);
  } else if (text.starts_with("frank(") && text.ends_with(")")) {
    arg = text.substr(6, text.size() - 7);
  }
  if (!arg.empty()) {
    double s = 0.0;
    if (parse_double(arg, s) && s > 0.0 && s != 1.0) {
      return frank(s);
    }
  }
  throw std::invalid_argument("unknown norm couple: " + std::string(text));
}

}  // namespace penta
