// Copyright 2026 the heegner library authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEEGNER_CONTFRAC_HPP
#define HEEGNER_CONTFRAC_HPP

#include <optional>

#include "heegner/bigfloat.hpp"
#include "heegner/util.hpp"

namespace heegner {

struct RationalApprox {
  Rat value;
  Int denominator_bound;
};

// Best continued-fraction convergent of x with denominator <= max_den,
// accepted only when |x - p/q| < 1/(2*max_den^2). A float within that
// distance of a fraction with small denominator determines it uniquely.
inline std::optional<RationalApprox> rational_reconstruct(const BigFloat& x,
                                                          const Int& max_den) {
  if (max_den < 1) throw ValidationError("rational_reconstruct: bound < 1");
  Rat target = x.convert_to<Rat>();  // exact: binary floats are rational
  Int a = numerator(target), b = denominator(target);

  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rat best;
  bool have = false;
  while (b != 0) {
    Int t;
    Int q, r;
    divide_qr(a, b, q, r);
    if (r < 0) {  // floor division for negatives
      q -= 1;
      r += b;
    }
    t = q * p1 + p0;
    p0 = p1;
    p1 = t;
    t = q * q1 + q0;
    q0 = q1;
    q1 = t;
    a = b;
    b = r;
    if (q1 > max_den) break;
    best = Rat(p1, q1);
    have = true;
  }
  if (!have) return std::nullopt;
  Rat err = target - best;
  if (err < 0) err = -err;
  if (err * 2 * max_den * max_den < 1)
    return RationalApprox{best, max_den};
  return std::nullopt;
}

}  // namespace heegner

#endif  // HEEGNER_CONTFRAC_HPP
