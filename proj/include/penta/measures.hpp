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

// Similarity, entropy and syntropy of five-valued vectors, their closed
// forms over (mu, nu), and set-level aggregation.

#ifndef PENTA_MEASURES_HPP
#define PENTA_MEASURES_HPP

#include "penta/bifuzzy.hpp"
#include "penta/bifuzzy_set.hpp"
#include "penta/penta_value.hpp"

namespace penta {

/// Bhattacharyya coefficient of the two five-component distributions:
///   S = sqrt(t1 t2) + sqrt(f1 f2) + sqrt(c1 c2) + sqrt(u1 u2) + sqrt(i1 i2).
/// In [0,1]; 1 iff the distributions are equal, 0 iff their supports are
/// disjoint. Symmetric.
double similarity(const PentaValue& x1, const PentaValue& x2);

/// Total uncertainty c + u + i and its attribution.
/// For vectors with t*f = 0 (everything to_penta produces) the scalar
/// equals similarity(x, complement(x)); off that manifold the similarity
/// route exceeds c + u + i by exactly 2*sqrt(t*f), so the direct sum is the
/// definition and the similarity identity is a cross-check.
struct Entropy {
  double scalar;
  double c;
  double u;
  double i;
};
Entropy entropy(const PentaValue& x);

/// The complement measure t + f (negentropy) and its attribution.
/// scalar == 1 - entropy(x).scalar always.
struct Syntropy {
  double scalar;
  double t;
  double f;
};
Syntropy syntropy(const PentaValue& x);

/// Balanced-mode closed form, evaluated directly from (mu, nu):
///   e = (1 - a) / (1 - ab),  a = |mu-nu|, b = |mu+nu-1|.
double entropy_closed_form_balanced(const BifuzzyValue& v);

/// gamma = a(1 - b) / (1 - ab); equals 1 - entropy_closed_form_balanced(v)
/// and equals distance(v).
double syntropy_closed_form_balanced(const BifuzzyValue& v);

/// Set-level measures: unnormalised sums over the canonically sorted
/// universe (an empty set sums to zero). Summation is sequential in label
/// order so results are bit-stable.
struct SetEntropy {
  double scalar = 0.0;
  double c = 0.0;
  double u = 0.0;
  double i = 0.0;
};
SetEntropy set_entropy(const BifuzzySet& s, TransformMode mode);

struct SetSyntropy {
  double scalar = 0.0;
  double t = 0.0;
  double f = 0.0;
};
SetSyntropy set_syntropy(const BifuzzySet& s, TransformMode mode);

/// Mean elementwise similarity over two sets with identical universes.
/// Throws std::invalid_argument listing the missing/extra labels when the
/// universes differ. Equals 1 iff every elementwise similarity is 1.
/// The mean of an empty (but matching) universe is defined as 1.
double set_similarity(const BifuzzySet& s1, const BifuzzySet& s2,
                      TransformMode mode);

}  // namespace penta

#endif  // PENTA_MEASURES_HPP
