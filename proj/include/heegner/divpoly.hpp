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

#ifndef HEEGNER_DIVPOLY_HPP
#define HEEGNER_DIVPOLY_HPP

#include <vector>

#include "heegner/point.hpp"
#include "heegner/poly.hpp"
#include "heegner/util.hpp"

namespace heegner {

// Polynomials reduced modulo y^2 = x^3 + Ax + B, kept as an x-polynomial
// together with a parity flag: value = x_part(x) * y^has_y.
struct YPoly {
  Poly<Rat> x_part;
  bool has_y = false;
};

// psi_m, phi_m, omega_m for multiplication by m on y^2 = x^3 + Ax + B.
struct DivisionPolys {
  long m = 0;
  Rat A, B;
  YPoly psi;
  Poly<Rat> phi;
  YPoly omega;
};

namespace detail {

inline Poly<Rat> poly_divexact(const Poly<Rat>& a, const Poly<Rat>& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.empty()) throw InternalError("inexact polynomial division");
  return q;
}

struct DivPolyTable {
  Poly<Rat> f;  // x^3 + Ax + B
  std::vector<YPoly> psi;

  YPoly mul(const YPoly& a, const YPoly& b) const {
    YPoly r;
    r.x_part = poly_mul(a.x_part, b.x_part);
    if (a.has_y && b.has_y) {
      r.x_part = poly_mul(r.x_part, f);
      r.has_y = false;
    } else {
      r.has_y = a.has_y != b.has_y;
    }
    return r;
  }
  YPoly sub(const YPoly& a, const YPoly& b) const {
    if (a.has_y != b.has_y && !a.x_part.empty() && !b.x_part.empty())
      throw InternalError("parity mismatch in division polynomial recursion");
    YPoly r;
    r.x_part = poly_sub(a.x_part, b.x_part);
    r.has_y = a.x_part.empty() ? b.has_y : a.has_y;
    return r;
  }
  YPoly cube(const YPoly& a) const { return mul(a, mul(a, a)); }
  YPoly square(const YPoly& a) const { return mul(a, a); }

  // (x_part * y^0) / (2y) = y * x_part / (2 f); the division is exact.
  YPoly div_2y(const YPoly& a) const {
    if (a.has_y) throw InternalError("div_2y expects even parity");
    YPoly r;
    r.x_part = poly_scale(poly_divexact(a.x_part, f), Rat(1, 2));
    r.has_y = true;
    return r;
  }
};

}  // namespace detail

inline DivisionPolys division_polys(const Rat& A, const Rat& B, long m) {
  if (m < 1) throw ValidationError("division_polys: m must be >= 1");
  detail::DivPolyTable T;
  T.f = {B, A, Rat(0), Rat(1)};
  long top = m + 2;
  auto& psi = T.psi;
  psi.resize(top + 1);
  psi[0] = {{}, false};
  psi[1] = {{Rat(1)}, false};
  if (top >= 2) psi[2] = {{Rat(2)}, true};
  if (top >= 3)
    psi[3] = {{-A * A, 12 * B, 6 * A, Rat(0), Rat(3)}, false};
  if (top >= 4)
    psi[4] = {poly_scale(Poly<Rat>{-8 * B * B - A * A * A, -4 * A * B,
                                   -5 * A * A, 20 * B, 5 * A, Rat(0), Rat(1)},
                         Rat(4)),
              true};
  for (long k = 5; k <= top; ++k) {
    long half = k / 2;
    if (k % 2 == 1) {
      // psi_{2h+1} = psi_{h+2} psi_h^3 - psi_{h-1} psi_{h+1}^3
      psi[k] = T.sub(T.mul(psi[half + 2], T.cube(psi[half])),
                     T.mul(psi[half - 1], T.cube(psi[half + 1])));
    } else {
      // 2y psi_{2h} = psi_h (psi_{h+2} psi_{h-1}^2 - psi_{h-2} psi_{h+1}^2)
      YPoly inner = T.sub(T.mul(psi[half + 2], T.square(psi[half - 1])),
                          T.mul(psi[half - 2], T.square(psi[half + 1])));
      psi[k] = T.div_2y(T.mul(psi[half], inner));
    }
  }

  DivisionPolys D;
  D.m = m;
  D.A = A;
  D.B = B;
  D.psi = psi[m];

  // phi_m = x psi_m^2 - psi_{m+1} psi_{m-1}
  YPoly xpsisq = T.square(psi[m]);
  xpsisq.x_part = poly_mul(Poly<Rat>{Rat(0), Rat(1)}, xpsisq.x_part);
  YPoly phi = T.sub(xpsisq, T.mul(psi[m + 1], psi[m - 1]));
  if (phi.has_y) throw InternalError("phi must be an x-polynomial");
  D.phi = phi.x_part;

  // 4y omega_m = psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2
  YPoly prev2 = (m >= 2) ? psi[m - 2] : YPoly{{Rat(-1)}, false};  // psi_{-1}
  YPoly rhs = T.sub(T.mul(psi[m + 2], T.square(psi[m - 1])),
                    T.mul(prev2, T.square(psi[m + 1])));
  if (rhs.has_y) {
    D.omega = {poly_scale(rhs.x_part, Rat(1, 4)), false};
  } else {
    D.omega = {poly_scale(detail::poly_divexact(rhs.x_part, T.f), Rat(1, 4)),
               true};
  }
  return D;
}

// Multiplication by m through (phi_m/psi_m^2, omega_m/psi_m^3). Signals
// m*P = infinity when psi_m(P) = 0.
template <class F, class Conv>
AffinePoint<F> mul_by_m_formula(const AffinePoint<F>& P, const DivisionPolys& D,
                                Conv conv) {
  if (P.infinity) return P;
  const F x0 = P.x, y0 = P.y;
  F fx = ((x0 * x0) * x0) + conv(D.A) * x0 + conv(D.B);
  F u = poly_eval_map(D.psi.x_part, x0, conv);
  F psi_sq = D.psi.has_y ? u * u * fx : u * u;
  F zero = x0 - x0;
  if (psi_sq == zero) return AffinePoint<F>::at_infinity();

  F xm = poly_eval_map(D.phi, x0, conv) * ring_inv(psi_sq);
  F omega_val = poly_eval_map(D.omega.x_part, x0, conv);
  if (D.omega.has_y) omega_val = omega_val * y0;
  F psi_cubed = u * u * u;
  if (D.psi.has_y) psi_cubed = psi_cubed * (y0 * fx);
  F ym = omega_val * ring_inv(psi_cubed);
  return {xm, ym};
}

}  // namespace heegner

#endif  // HEEGNER_DIVPOLY_HPP
