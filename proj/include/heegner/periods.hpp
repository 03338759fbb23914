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

#ifndef HEEGNER_PERIODS_HPP
#define HEEGNER_PERIODS_HPP

#include <array>
#include <vector>

#include "heegner/bigfloat.hpp"
#include "heegner/curve.hpp"
#include "heegner/util.hpp"

namespace heegner {

// Lattice of the curve y^2 = x^3 + Ax + B under the convention x = p(z),
// y = p'(z)/2, i.e. g2 = -4A, g3 = -4B. omega1/omega2 lies in the standard
// fundamental domain and Im(omega1/omega2) > 0.
struct PeriodLattice {
  BigComplex omega1, omega2;
  BigComplex tau() const { return omega1 / omega2; }
  BigFloat real_volume() const { return abs((omega1.conj() * omega2).im); }
};

namespace detail {

// Roots of x^3 + Ax + B by Cardano plus Newton polishing.
inline std::array<BigComplex, 3> cubic_roots(const BigFloat& A, const BigFloat& B) {
  BigComplex p(A, BigFloat(0)), q(B, BigFloat(0));
  BigComplex disc = (q * q) * BigFloat(0.25) + (p * p * p) / BigFloat(27);
  BigComplex s = sqrt(disc);
  BigComplex u3 = BigComplex(BigFloat(0), BigFloat(0)) - q * BigFloat(0.5) + s;
  if (abs(u3) < pow(BigFloat(10), -static_cast<int>(BigFloat::default_precision() / 2)))
    u3 = BigComplex(BigFloat(0), BigFloat(0)) - q * BigFloat(0.5) - s;
  // principal cube root
  BigComplex u = exp(log(u3) / BigFloat(3));
  BigComplex w(BigFloat(-0.5), sqrt(BigFloat(3)) / 2);
  std::array<BigComplex, 3> roots;
  for (int k = 0; k < 3; ++k) {
    BigComplex uk = u * pow_int(w, k);
    BigComplex x = uk - p / (uk * BigFloat(3));
    for (int it = 0; it < 8; ++it) {  // Newton polish
      BigComplex f = (x * x * x) + p * x + q;
      BigComplex df = x * x * BigFloat(3) + p;
      x = x - f / df;
    }
    roots[k] = x;
  }
  return roots;
}

// AGM with the "good" square root branch: |a-b| <= |a+b|, ties broken
// toward Im(b/a) > 0.
inline BigComplex agm(BigComplex a, BigComplex b, unsigned digits) {
  BigFloat eps = pow(BigFloat(10), -static_cast<int>(digits));
  for (int it = 0; it < 8 * static_cast<int>(digits) + 64; ++it) {
    BigComplex am = (a + b) * BigFloat(0.5);
    BigComplex gm = sqrt(a * b);
    BigComplex d1 = am - gm, s1 = am + gm;
    if (abs(d1) > abs(s1) ||
        (abs(abs(d1) - abs(s1)) < eps * abs(s1) && (gm / am).im < 0))
      gm = -gm;
    a = am;
    b = gm;
    if (abs(a - b) < eps * abs(a)) return a;
  }
  throw Error("agm did not converge at the requested precision");
}

inline BigComplex eisenstein_series(const BigComplex& q, int weight_power,
                                    int coef, unsigned digits) {
  // E4: weight_power 3, coef 240; E6: weight_power 5, coef -504
  BigComplex sum(BigFloat(0), BigFloat(0));
  BigComplex qn = q;
  BigFloat tol = pow(BigFloat(10), -static_cast<int>(digits) - 5);
  for (int n = 1; n < 100000; ++n) {
    BigComplex num = qn;
    for (int k = 0; k < weight_power; ++k) num = num * BigFloat(n);
    BigComplex term = num / (BigComplex(BigFloat(1), BigFloat(0)) - qn);
    sum += term;
    qn = qn * q;
    if (abs(term) < tol && n > 4) break;
  }
  return BigComplex(BigFloat(1), BigFloat(0)) + BigFloat(coef) * sum;
}

}  // namespace detail

// Reduce tau to the fundamental domain, transforming the basis with it.
inline void reduce_basis(BigComplex& w1, BigComplex& w2) {
  if ((w1 / w2).im < 0) w1 = -w1;
  for (int it = 0; it < 10000; ++it) {
    BigComplex tau = w1 / w2;
    Int k = round_int(tau.re);
    if (k != 0) {
      w1 = w1 - BigFloat(k) * w2;
      tau = w1 / w2;
    }
    if (norm2(tau) < BigFloat(1) - pow(BigFloat(10), -30)) {
      BigComplex t = w1;
      w1 = -w2;
      w2 = t;
      continue;
    }
    return;
  }
  throw InternalError("fundamental domain reduction did not terminate");
}

// Period lattice by complex AGM, validated against the Eisenstein series
// recomputation of (g2, g3); root orderings are retried until the residual
// passes, so a wrong AGM branch cannot slip through.
inline PeriodLattice period_lattice(const ShortWeierstrass& W, unsigned digits) {
  PrecisionGuard guard(digits + 15);
  BigFloat A(W.A), B(W.B);
  if (4 * A * A * A + 27 * B * B == 0) throw ValidationError("singular cubic");
  auto roots = detail::cubic_roots(A, B);

  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  BigFloat best_residual(-1);
  PeriodLattice best;
  for (const auto& pm : perms) {
    const BigComplex &e1 = roots[pm[0]], &e2 = roots[pm[1]], &e3 = roots[pm[2]];
    BigComplex a = sqrt(e1 - e3), b = sqrt(e2 - e3), c = sqrt(e1 - e2);
    BigComplex w1, w2;
    try {
      BigFloat pi = pi_value();
      BigComplex m1 = detail::agm(a, b, digits + 10);
      BigComplex m2 = detail::agm(a, c, digits + 10);
      w1 = BigComplex(pi, BigFloat(0)) / m1;                  // "real" period
      w2 = BigComplex(BigFloat(0), pi) / m2;                  // "imaginary" period
    } catch (const Error&) {
      continue;
    }
    BigComplex W1 = w2, W2 = w1;
    reduce_basis(W1, W2);
    // validate: g2 = -4A, g3 = -4B from the q-expansion
    BigComplex tau = W1 / W2;
    BigComplex q = exp(BigComplex(BigFloat(0), BigFloat(1)) * tau * 2 * pi_value());
    BigComplex e4 = detail::eisenstein_series(q, 3, 240, digits);
    BigComplex e6 = detail::eisenstein_series(q, 5, -504, digits);
    BigComplex i_unit(BigFloat(0), BigFloat(1));
    for (int scale_by_i = 0; scale_by_i < 2; ++scale_by_i) {
      // multiplying the basis by i keeps tau, fixes g2, and negates g3
      BigComplex V1 = scale_by_i ? W1 * i_unit : W1;
      BigComplex V2 = scale_by_i ? W2 * i_unit : W2;
      BigComplex twopi_w2 = BigComplex(2 * pi_value(), BigFloat(0)) / V2;
      BigComplex g2 = pow_int(twopi_w2, 4) * e4 / BigFloat(12);
      BigComplex g3 = pow_int(twopi_w2, 6) * e6 / BigFloat(216);
      BigFloat residual = abs(g2 + BigComplex(4 * A, BigFloat(0))) +
                          abs(g3 + BigComplex(4 * B, BigFloat(0)));
      residual /= BigFloat(1) + abs(g2) + abs(g3);
      if (best_residual < 0 || residual < best_residual) {
        best_residual = residual;
        best.omega1 = V1;
        best.omega2 = V2;
      }
      if (residual < pow(BigFloat(10), -static_cast<int>(digits) + 5)) {
        PeriodLattice L;
        L.omega1 = V1;
        L.omega2 = V2;
        return L;
      }
    }
  }
  throw Error("period lattice: no AGM branch satisfied the Eisenstein check");
}

// Weierstrass p and p' from the q-expansion; z may be anywhere off the
// lattice (it is reduced first).
inline std::pair<BigComplex, BigComplex> weierstrass_p(const BigComplex& z,
                                                       const PeriodLattice& L,
                                                       unsigned digits) {
  PrecisionGuard guard(digits + 10);
  // write z = a w1 + b w2 with real a, b
  BigFloat det = L.omega1.re * L.omega2.im - L.omega1.im * L.omega2.re;
  BigFloat a = (z.re * L.omega2.im - z.im * L.omega2.re) / det;
  BigFloat b = (L.omega1.re * z.im - L.omega1.im * z.re) / det;
  a -= BigFloat(round_int(a));
  b -= BigFloat(round_int(b));
  BigComplex zr = BigFloat(a) * L.omega1 + BigFloat(b) * L.omega2;
  if (abs(zr) < pow(BigFloat(2), -static_cast<int>(bits_for_digits(digits))) *
                    abs(L.omega2))
    throw Error("weierstrass_p: z is within working precision of a pole");

  BigComplex tau = L.omega1 / L.omega2;
  BigComplex w = zr / L.omega2;
  BigFloat two_pi = 2 * pi_value();
  BigComplex q = exp(BigComplex(-two_pi * tau.im, two_pi * tau.re));
  BigComplex u = exp(BigComplex(-two_pi * w.im, two_pi * w.re));

  BigComplex one(BigFloat(1), BigFloat(0));
  auto sq = [](const BigComplex& t) { return t * t; };
  auto cube = [](const BigComplex& t) { return t * t * t; };

  BigComplex psum = one * (BigFloat(1) / 12) + u / sq(one - u);
  BigComplex dsum = u * (one + u) / cube(one - u);
  BigComplex qn = q;
  BigFloat tol = pow(BigFloat(10), -static_cast<int>(digits) - 5);
  for (int n = 1; n < 1000000; ++n) {
    BigComplex qu = qn * u;
    BigComplex qiu = qn / u;
    BigComplex t1 = qu / sq(one - qu);
    BigComplex t2 = qiu / sq(one - qiu);
    BigComplex t3 = qn / sq(one - qn);
    psum += t1 + t2 - BigFloat(2) * t3;
    dsum += qu * (one + qu) / cube(one - qu) - qiu * (one + qiu) / cube(one - qiu);
    BigFloat sz = abs(t1) + abs(t2) + abs(t3);
    qn = qn * q;
    if (sz < tol && n > 2) break;
  }
  BigComplex factor = BigComplex(BigFloat(0), two_pi) / L.omega2;  // 2 pi i / w2
  BigComplex p = sq(factor) * psum;
  BigComplex pprime = cube(factor) * dsum;
  return {p, pprime};
}

}  // namespace heegner

#endif  // HEEGNER_PERIODS_HPP
