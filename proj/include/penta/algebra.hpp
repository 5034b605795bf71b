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

// Vector operators over PentaValues. Union and intersection are
// parameterised by a NormCouple; min_max is the default because it is the
// only couple that preserves c*u = 0. Results are validated on
// construction, so a couple that leaves the valid region throws
// std::domain_error instead of producing a silently clamped value.

#ifndef PENTA_ALGEBRA_HPP
#define PENTA_ALGEBRA_HPP

#include "penta/norms.hpp"
#include "penta/penta_value.hpp"

namespace penta {

/// x1 v x2 = ( S(t1,t2),
///             T(c1+f1, c2+f2) - T(f1,f2),
///             T(u1+f1, u2+f2) - T(f1,f2),
///             T(f1,f2) )
PentaValue unite(const PentaValue& x1, const PentaValue& x2,
                 const NormCouple& couple = NormCouple::min_max());

/// x1 ^ x2 = ( T(t1,t2),
///             T(c1+t1, c2+t2) - T(t1,t2),
///             T(u1+t1, u2+t2) - T(t1,t2),
///             S(f1,f2) )
PentaValue intersect(const PentaValue& x1, const PentaValue& x2,
                     const NormCouple& couple = NormCouple::min_max());

/// (t,c,u,f) -> (f,c,u,t). Involution; fixes c and u.
PentaValue complement(const PentaValue& x);

/// (t,c,u,f) -> (f,u,c,t). Involution; swaps the two neutral indices as
/// well as t and f. Equals dual(complement(x)).
PentaValue negate(const PentaValue& x);

/// (t,c,u,f) -> (t,u,c,f). Involution; fixes t and f.
PentaValue dual(const PentaValue& x);

/// complement(x) v y. On the five constants this reproduces the crisp
/// implication table; complement (not negation) is the reconstruction that
/// matches it.
PentaValue implies(const PentaValue& x, const PentaValue& y,
                   const NormCouple& couple = NormCouple::min_max());

/// (x -> y) ^ (y -> x).
PentaValue equivalent(const PentaValue& x, const PentaValue& y,
                      const NormCouple& couple = NormCouple::min_max());

}  // namespace penta

#endif  // PENTA_ALGEBRA_HPP
