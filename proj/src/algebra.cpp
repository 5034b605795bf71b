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

#include "penta/algebra.hpp"

namespace penta {

PentaValue unite(const PentaValue& x1, const PentaValue& x2,
                 const NormCouple& couple) {
  const double tf = couple.tnorm(x1.f(), x2.f());
  return PentaValue(couple.tconorm(x1.t(), x2.t()),
                    couple.tnorm(x1.c() + x1.f(), x2.c() + x2.f()) - tf,
                    couple.tnorm(x1.u() + x1.f(), x2.u() + x2.f()) - tf, tf);
}

PentaValue intersect(const PentaValue& x1, const PentaValue& x2,
                     const NormCouple& couple) {
  const double tt = couple.tnorm(x1.t(), x2.t());
  return PentaValue(tt, couple.tnorm(x1.c() + x1.t(), x2.c() + x2.t()) - tt,
                    couple.tnorm(x1.u() + x1.t(), x2.u() + x2.t()) - tt,
                    couple.tconorm(x1.f(), x2.f()));
}

PentaValue complement(const PentaValue& x) {
  return PentaValue(x.f(), x.c(), x.u(), x.t());
}

PentaValue negate(const PentaValue& x) {
  return PentaValue(x.f(), x.u(), x.c(), x.t());
}

PentaValue dual(const PentaValue& x) {
  return PentaValue(x.t(), x.u(), x.c(), x.f());
}

PentaValue implies(const PentaValue& x, const PentaValue& y,
                   const NormCouple& couple) {
  return unite(complement(x), y, couple);
}

PentaValue equivalent(const PentaValue& x, const PentaValue& y,
                      const NormCouple& couple) {
  return intersect(implies(x, y, couple), implies(y, x, couple), couple);
}

}  // namespace penta
