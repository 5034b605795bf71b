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

#include "penta/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace penta {

double similarity(const PentaValue& x1, const PentaValue& x2) {
  return std::sqrt(x1.t() * x2.t()) + std::sqrt(x1.f() * x2.f()) +
         std::sqrt(x1.c() * x2.c()) + std::sqrt(x1.u() * x2.u()) +
         std::sqrt(x1.i() * x2.i());
}

Entropy entropy(const PentaValue& x) {
  return {x.c() + x.u() + x.i(), x.c(), x.u(), x.i()};
}

Syntropy syntropy(const PentaValue& x) {
  return {x.t() + x.f(), x.t(), x.f()};
}

double entropy_closed_form_balanced(const BifuzzyValue& v) {
  const double a = std::fabs(v.mu() - v.nu());
  const double b = std::fabs(v.mu() + v.nu() - 1.0);
  return (1.0 - a) / (1.0 - a * b);
}

double syntropy_closed_form_balanced(const BifuzzyValue& v) {
  const double a = std::fabs(v.mu() - v.nu());
  const double b = std::fabs(v.mu() + v.nu() - 1.0);
  return a * (1.0 - b) / (1.0 - a * b);
}

SetEntropy set_entropy(const BifuzzySet& s, TransformMode mode) {
  SetEntropy total;
  for (const auto& [label, value] : s.elements()) {
    const Entropy e = entropy(to_penta(value, mode));
    total.scalar += e.scalar;
    total.c += e.c;
    total.u += e.u;
    total.i += e.i;
  }
  return total;
}

SetSyntropy set_syntropy(const BifuzzySet& s, TransformMode mode) {
  SetSyntropy total;
  for (const auto& [label, value] : s.elements()) {
    const Syntropy g = syntropy(to_penta(value, mode));
    total.scalar += g.scalar;
    total.t += g.t;
    total.f += g.f;
  }
  return total;
}

double set_similarity(const BifuzzySet& s1, const BifuzzySet& s2,
                      TransformMode mode) {
  auto it1 = s1.elements().begin();
  auto it2 = s2.elements().begin();
  std::string missing;
  std::string extra;
  while (it1 != s1.elements().end() || it2 != s2.elements().end()) {
    if (it2 == s2.elements().end() ||
        (it1 != s1.elements().end() && it1->first < it2->first)) {
      missing += missing.empty() ? it1->first : ", " + it1->first;
      ++it1;
    } else if (it1 == s1.elements().end() || it2->first < it1->first) {
      extra += extra.empty() ? it2->first : ", " + it2->first;
      ++it2;
    } else {
      ++it1;
      ++it2;
    }
  }
  if (!missing.empty() || !extra.empty()) {
    std::string message = "universes differ";
    if (!missing.empty()) message += "; only in first: " + missing;
    if (!extra.empty()) message += "; only in second: " + extra;
    throw std::invalid_argument(message);
  }
  if (s1.empty()) return 1.0;
  double sum = 0.0;
  it2 = s2.elements().begin();
  for (const auto& [label, value] : s1.elements()) {
    sum += similarity(to_penta(value, mode), to_penta(it2->second, mode));
    ++it2;
  }
  return sum / static_cast<double>(s1.size());
}

}  // namespace penta
