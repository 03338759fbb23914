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

#ifndef HEEGNER_POINT_HPP
#define HEEGNER_POINT_HPP

#include <sstream>

#include "heegner/bigfloat.hpp"
#include "heegner/util.hpp"

namespace heegner {

template <class F>
struct AffinePoint {
  F x, y;
  bool infinity = true;

  AffinePoint() = default;
  AffinePoint(F xx, F yy) : x(std::move(xx)), y(std::move(yy)), infinity(false) {}
  static AffinePoint at_infinity() { return AffinePoint(); }
};

// Full Weierstrass model over a field F: y^2 + a1 xy + a3 y = x^3 + a2 x^2 +
// a4 x + a6. Coefficients live in F; the group law is the usual chord and
// tangent construction. Division in F goes through ring_inv, which throws a
// descriptive error for a non-invertible denominator.
template <class F>
struct CurveOver {
  F a1, a2, a3, a4, a6;

  bool on_curve(const AffinePoint<F>& P) const {
    if (P.infinity) return true;
    F lhs = P.y * P.y + a1 * P.x * P.y + a3 * P.y;
    F rhs = ((P.x + a2) * P.x + a4) * P.x + a6;
    return lhs == rhs;
  }

  AffinePoint<F> neg(const AffinePoint<F>& P) const {
    if (P.infinity) return P;
    return {P.x, (P.y - (P.y + P.y)) - a1 * P.x - a3};  // -y - a1 x - a3
  }

  AffinePoint<F> add(const AffinePoint<F>& P, const AffinePoint<F>& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    F lambda = a1 - a1;  // zero of the field
    if (P.x == Q.x) {
      F negy = neg(Q).y;
      if (P.y == negy) return AffinePoint<F>::at_infinity();
      // tangent
      F num = ((P.x * P.x) + (P.x * P.x) + (P.x * P.x)) + (a2 * P.x + a2 * P.x) +
              a4 - a1 * P.y;
      F den = P.y + P.y + a1 * P.x + a3;
      lambda = num * ring_inv(den);
    } else {
      lambda = (Q.y - P.y) * ring_inv(Q.x - P.x);
    }
    F x3 = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
    F y3 = lambda * (P.x - x3) - P.y - a1 * x3 - a3;
    return {x3, y3};
  }

  AffinePoint<F> mul(Int n, const AffinePoint<F>& P) const {
    AffinePoint<F> base = P;
    if (n < 0) {
      base = neg(base);
      n = -n;
    }
    AffinePoint<F> acc = AffinePoint<F>::at_infinity();
    while (n > 0) {
      if ((n & 1) != 0) acc = add(acc, base);
      n >>= 1;
      if (n > 0) base = add(base, base);
    }
    return acc;
  }
};

template <class F>
CurveOver<F> short_curve(const F& A, const F& B) {
  F zero = A - A;
  return CurveOver<F>{zero, zero, zero, A, B};
}

}  // namespace heegner

#endif  // HEEGNER_POINT_HPP
