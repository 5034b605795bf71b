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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "penta/penta_value.hpp"

using namespace penta;

namespace {
doctest::Approx approx(double x) { return doctest::Approx(x).epsilon(1e-12); }
}  // namespace

TEST_CASE("default value is pure ambiguity") {
  const PentaValue p;
  CHECK(p.t() == 0.0);
  CHECK(p.c() == 0.0);
  CHECK(p.u() == 0.0);
  CHECK(p.f() == 0.0);
  CHECK(p.i() == 1.0);
}

TEST_CASE("construction validates components and their sum") {
  const PentaValue p(0.2, 0.1, 0.0, 0.3);
  CHECK(p.i() == approx(0.4));

  CHECK_THROWS_AS(PentaValue(-0.1, 0, 0, 0), std::domain_error);
  CHECK_THROWS_AS(PentaValue(0, 0, 0, -1e-11), std::domain_error);
  CHECK_THROWS_AS(PentaValue(0.5, 0.5, 0.5, 0), std::domain_error);

  // Sub-noise negatives snap to exact zero instead of throwing.
  const PentaValue snapped(0.5, -1e-13, 0.0, 0.0);
  CHECK(snapped.c() == 0.0);

  // A sum barely above one is rounding noise, not an error.
  CHECK_NOTHROW(PentaValue(0.5, 0.5, 5e-13, 0.0));
  CHECK(PentaValue(0.5, 0.5, 5e-13, 0.0).i() == 0.0);
}

TEST_CASE("the split puts tau and delta into disjoint channels") {
  const PentaValue p = to_penta(BifuzzyValue(0.7, 0.2),
                                TransformMode::standard);
  CHECK(p.t() == approx(0.5));
  CHECK(p.f() == 0.0);
  CHECK(p.c() == 0.0);
  CHECK(p.u() == approx(0.1));
  CHECK(p.i() == approx(0.4));

  for (int im = 0; im <= 20; ++im) {
    for (int in = 0; in <= 20; ++in) {
      const BifuzzyValue v(im / 20.0, in / 20.0);
      for (TransformMode mode :
           {TransformMode::standard, TransformMode::balanced}) {
        const PentaValue q = to_penta(v, mode);
        CHECK(q.t() * q.f() == 0.0);
        CHECK(q.c() * q.u() == 0.0);
        const double sum = q.t() + q.c() + q.u() + q.f() + q.i();
        CHECK(sum == approx(1.0));
      }
    }
  }
}

TEST_CASE("the five anchor points land on the five constants") {
  CHECK(to_penta(BifuzzyValue(1, 0), TransformMode::standard) ==
        PentaValue(1, 0, 0, 0));
  CHECK(to_penta(BifuzzyValue(0, 1), TransformMode::standard) ==
        PentaValue(0, 0, 0, 1));
  CHECK(to_penta(BifuzzyValue(1, 1), TransformMode::standard) ==
        PentaValue(0, 1, 0, 0));
  CHECK(to_penta(BifuzzyValue(0, 0), TransformMode::standard) ==
        PentaValue(0, 0, 1, 0));
  CHECK(to_penta(BifuzzyValue(0.5, 0.5), TransformMode::standard) ==
        PentaValue(0, 0, 0, 0));
  // Same five under the balanced transform.
  CHECK(to_penta(BifuzzyValue(1, 1), TransformMode::balanced) ==
        PentaValue(0, 1, 0, 0));
  CHECK(to_penta(BifuzzyValue(0.5, 0.5), TransformMode::balanced) ==
        PentaValue(0, 0, 0, 0));
}

TEST_CASE("from_penta inverts the standard pipeline") {
  for (int im = 0; im <= 20; ++im) {
    for (int in = 0; in <= 20; ++in) {
      const BifuzzyValue v(im / 20.0, in / 20.0);
      const BifuzzyValue w = from_penta(to_penta(v, TransformMode::standard));
      CHECK(w.mu() == approx(v.mu()));
      CHECK(w.nu() == approx(v.nu()));
    }
  }
}

TEST_CASE("from_penta rejects vectors with no single preimage") {
  CHECK_THROWS_AS(from_penta(PentaValue(0.3, 0, 0, 0.3)), std::domain_error);
  CHECK_THROWS_AS(from_penta(PentaValue(0, 0.2, 0.2, 0)), std::domain_error);
}

TEST_CASE("crisp constants enumerate T, F, C, U, I") {
  const auto& constants = crisp_constants();
  REQUIRE(constants.size() == 5);
  CHECK(constants[0].label == CrispLabel::True);
  CHECK(constants[0].value == PentaValue(1, 0, 0, 0));
  CHECK(constants[1].label == CrispLabel::False);
  CHECK(constants[1].value == PentaValue(0, 0, 0, 1));
  CHECK(constants[2].label == CrispLabel::Inconsistent);
  CHECK(constants[2].value == PentaValue(0, 1, 0, 0));
  CHECK(constants[3].label == CrispLabel::Incomplete);
  CHECK(constants[3].value == PentaValue(0, 0, 1, 0));
  CHECK(constants[4].label == CrispLabel::Ambiguous);
  CHECK(constants[4].value == PentaValue(0, 0, 0, 0));
  for (const CrispConstant& c : constants) {
    CHECK(crisp_value(c.label) == c.value);
  }
}

TEST_CASE("single-letter labels round-trip") {
  for (const CrispConstant& c : crisp_constants()) {
    const char ch = to_char(c.label);
    REQUIRE(crisp_label_from_char(ch).has_value());
    CHECK(*crisp_label_from_char(ch) == c.label);
  }
  CHECK(to_char(CrispLabel::Incomplete) == 'u');
  CHECK(to_char(CrispLabel::Inconsistent) == 'c');
  CHECK_FALSE(crisp_label_from_char('x').has_value());
}

TEST_CASE("crisp recognition uses a tolerance band") {
  CHECK(crisp_label_of(PentaValue(1, 0, 0, 0)) == CrispLabel::True);
  CHECK(crisp_label_of(PentaValue(1 - 1e-10, 0, 1e-10, 0)) ==
        CrispLabel::True);
  CHECK_FALSE(crisp_label_of(PentaValue(0.5, 0, 0, 0)).has_value());
  CHECK_FALSE(crisp_label_of(PentaValue(1 - 1e-6, 0, 1e-6, 0), 1e-9)
                  .has_value());
}
