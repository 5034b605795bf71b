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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "penta/algebra.hpp"

using namespace penta;

namespace {

doctest::Approx approx(double x) { return doctest::Approx(x).epsilon(1e-12); }

struct Lcg {
  std::uint64_t state = 0x2545f4914f6cdd1dull;
  double next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  }
};

// Valid vector with t*f = 0; the domain every couple is closed on.
PentaValue random_mixed(Lcg& rng) {
  double cut[4] = {rng.next(), rng.next(), rng.next(), rng.next()};
  std::sort(cut, cut + 4);
  const double parts[4] = {cut[0], cut[1] - cut[0], cut[2] - cut[1],
                           cut[3] - cut[2]};
  if (rng.next() < 0.5) return PentaValue(parts[0], parts[1], parts[2], 0.0);
  return PentaValue(0.0, parts[1], parts[2], parts[3]);
}

double max_component_diff(const PentaValue& a, const PentaValue& b) {
  return std::max({std::fabs(a.t() - b.t()), std::fabs(a.c() - b.c()),
                   std::fabs(a.u() - b.u()), std::fabs(a.f() - b.f())});
}

const std::vector<NormCouple> kAll = {
    NormCouple::min_max(), NormCouple::product_probsum(),
    NormCouple::lukasiewicz(), NormCouple::frank(0.5), NormCouple::frank(2.0),
    NormCouple::frank(10.0)};

const PentaValue T = crisp_value(CrispLabel::True);
const PentaValue F = crisp_value(CrispLabel::False);
const PentaValue C = crisp_value(CrispLabel::Inconsistent);
const PentaValue U = crisp_value(CrispLabel::Incomplete);
const PentaValue I = crisp_value(CrispLabel::Ambiguous);

}  // namespace

TEST_CASE("unary operators are the documented permutations") {
  const PentaValue x(0.1, 0.2, 0.3, 0.15);
  CHECK(complement(x) == PentaValue(0.15, 0.2, 0.3, 0.1));
  CHECK(negate(x) == PentaValue(0.15, 0.3, 0.2, 0.1));
  CHECK(dual(x) == PentaValue(0.1, 0.3, 0.2, 0.15));

  CHECK(complement(complement(x)) == x);
  CHECK(negate(negate(x)) == x);
  CHECK(dual(dual(x)) == x);
  CHECK(negate(x) == dual(complement(x)));
  CHECK(negate(x) == complement(dual(x)));
}

TEST_CASE("crisp lattice corners behave under union and intersection") {
  CHECK(unite(T, F) == T);
  CHECK(intersect(T, F) == F);
  // A fully inconsistent and a fully incomplete value cancel to ambiguity.
  CHECK(unite(C, U) == I);
  CHECK(intersect(C, U) == I);
  CHECK(unite(I, F) == I);
  CHECK(intersect(I, T) == I);
}

TEST_CASE("the default couple is min_max") {
  Lcg rng;
  for (int it = 0; it < 100; ++it) {
    const PentaValue x = random_mixed(rng);
    const PentaValue y = random_mixed(rng);
    CHECK(unite(x, y) == unite(x, y, NormCouple::min_max()));
    CHECK(intersect(x, y) == intersect(x, y, NormCouple::min_max()));
  }
}

TEST_CASE("implication is complement-then-union, not negation") {
  // Under negation the incomplete value would not imply itself.
  CHECK(implies(U, U) == U);
  CHECK(unite(negate(U), U) == I);
  CHECK(implies(F, F) == T);
  CHECK(implies(T, F) == F);
  CHECK(implies(C, C) == C);
}

TEST_CASE("equivalence is the two-way implication") {
  CHECK(equivalent(T, F) == F);
  CHECK(equivalent(T, T) == T);
  CHECK(equivalent(C, C) == C);
  CHECK(equivalent(F, F) == T);
  CHECK(equivalent(U, C) == I);
}

TEST_CASE("min_max union and intersection are idempotent") {
  Lcg rng;
  for (int it = 0; it < 500; ++it) {
    const PentaValue x = random_mixed(rng);
    CHECK(max_component_diff(unite(x, x), x) <= 1e-12);
    CHECK(max_component_diff(intersect(x, x), x) <= 1e-12);
  }
}

TEST_CASE("product union is not idempotent: pinned counterexample") {
  const NormCouple prod = NormCouple::product_probsum();
  const PentaValue x(0.5, 0.0, 0.1, 0.0);
  const PentaValue xx = unite(x, x, prod);
  CHECK(xx.t() == approx(0.75));
  CHECK(xx.c() == 0.0);
  CHECK(xx.u() == approx(0.01));
  CHECK(xx.f() == 0.0);
  CHECK(max_component_diff(xx, x) > 0.2);
}

TEST_CASE("product union can create simultaneous c and u: pinned pair") {
  const NormCouple prod = NormCouple::product_probsum();
  const PentaValue x(0.0, 0.3, 0.0, 0.2);
  const PentaValue y(0.0, 0.0, 0.4, 0.1);
  const PentaValue u = unite(x, y, prod);
  CHECK(u.t() == 0.0);
  CHECK(u.c() == approx(0.03));
  CHECK(u.u() == approx(0.08));
  CHECK(u.f() == approx(0.02));
  CHECK(u.c() * u.u() == approx(0.0024));

  // The same pair stays single-natured under min_max.
  const PentaValue m = unite(x, y);
  CHECK(std::min(m.c(), m.u()) == 0.0);
}

TEST_CASE("De Morgan duality is exact for every couple") {
  Lcg rng;
  for (const NormCouple& k : kAll) {
    for (int it = 0; it < 200; ++it) {
      const PentaValue x = random_mixed(rng);
      const PentaValue y = random_mixed(rng);
      CHECK(max_component_diff(
                complement(unite(x, y, k)),
                intersect(complement(x), complement(y), k)) <= 1e-12);
      CHECK(max_component_diff(
                complement(intersect(x, y, k)),
                unite(complement(x), complement(y), k)) <= 1e-12);
    }
  }
}

TEST_CASE("dual distributes over both operations for every couple") {
  Lcg rng;
  for (const NormCouple& k : kAll) {
    for (int it = 0; it < 200; ++it) {
      const PentaValue x = random_mixed(rng);
      const PentaValue y = random_mixed(rng);
      CHECK(max_component_diff(dual(unite(x, y, k)),
                               unite(dual(x), dual(y), k)) <= 1e-12);
      CHECK(max_component_diff(dual(intersect(x, y, k)),
                               intersect(dual(x), dual(y), k)) <= 1e-12);
    }
  }
}

TEST_CASE("union and intersection commute and associate for every couple") {
  Lcg rng;
  for (const NormCouple& k : kAll) {
    for (int it = 0; it < 200; ++it) {
      const PentaValue x = random_mixed(rng);
      const PentaValue y = random_mixed(rng);
      const PentaValue z = random_mixed(rng);
      CHECK(max_component_diff(unite(x, y, k), unite(y, x, k)) <= 1e-12);
      CHECK(max_component_diff(intersect(x, y, k), intersect(y, x, k)) <=
            1e-12);
      CHECK(max_component_diff(unite(unite(x, y, k), z, k),
                               unite(x, unite(y, z, k), k)) <= 1e-12);
      CHECK(max_component_diff(intersect(intersect(x, y, k), z, k),
                               intersect(x, intersect(y, z, k), k)) <= 1e-12);
    }
  }
}

TEST_CASE("False and True are the neutral elements") {
  Lcg rng;
  for (const NormCouple& k : kAll) {
    for (int it = 0; it < 200; ++it) {
      const PentaValue x = random_mixed(rng);
      CHECK(max_component_diff(unite(x, F, k), x) <= 1e-12);
      CHECK(max_component_diff(intersect(x, T, k), x) <= 1e-12);
      CHECK(max_component_diff(unite(x, T, k), T) <= 1e-12);
      CHECK(max_component_diff(intersect(x, F, k), F) <= 1e-12);
    }
  }
}
