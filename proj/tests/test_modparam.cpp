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

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "heegner/apcount.hpp"
#include "heegner/curve.hpp"
#include "heegner/modparam.hpp"
#include "heegner/periods.hpp"

using namespace heegner;

namespace {

const CurveDatabase& db() {
  static CurveDatabase d(std::string(HEEGNER_DATA_DIR) + "/curves.db");
  return d;
}

// oracle: invert p(z) = x0 by Newton iteration from a coarse grid
BigComplex elliptic_log_newton(const PeriodLattice& L, const BigComplex& x0,
                               unsigned digits) {
  for (double aa = 0.05; aa < 1.0; aa += 0.09)
    for (double bb = 0.05; bb < 1.0; bb += 0.09) {
      BigComplex z = BigFloat(aa) * L.omega1 + BigFloat(bb) * L.omega2;
      bool ok = true;
      for (int it = 0; it < 120 && ok; ++it) {
        try {
          auto [p, dp] = weierstrass_p(z, L, digits);
          BigComplex step = (p - x0) / dp;
          z = z - step;
          if (abs(step) < pow(BigFloat(10), -static_cast<int>(digits) + 6)) break;
        } catch (const Error&) {
          ok = false;
        }
      }
      if (!ok) continue;
      try {
        auto [p, dp] = weierstrass_p(z, L, digits);
        if (abs(p - x0) < pow(BigFloat(10), -static_cast<int>(digits) + 10))
          return z;
      } catch (const Error&) {
      }
    }
  throw Error("elliptic log: no preimage found");
}

}  // namespace

TEST_CASE("square lattice for the CM curve y^2 = x^3 - x") {
  PrecisionGuard g(60);
  ShortWeierstrass W{Rat(-1), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)};
  PeriodLattice L = period_lattice(W, 50);
  BigComplex tau = L.tau();
  REQUIRE(abs(tau - BigComplex(BigFloat(0), BigFloat(1))) < BigFloat("1e-45"));
}

TEST_CASE("period lattice of 389A1 reproduces the rational point (0,0)") {
  PrecisionGuard g(60);
  const CurveData& E = db().lookup("389A1");
  ShortWeierstrass W = to_short_weierstrass(E);
  PeriodLattice L = period_lattice(W, 50);
  REQUIRE(L.real_volume() > 0);

  // (0,0) on the minimal model maps to (1/3, 1/2) on the short model
  BigComplex x0(BigFloat(Rat(1, 3)), BigFloat(0));
  BigComplex z = elliptic_log_newton(L, x0, 50);
  auto [p, dp] = weierstrass_p(z, L, 50);
  REQUIRE(abs(p - x0) < BigFloat("1e-40"));
  // p' = 2 y_short = +-1
  REQUIRE((abs(dp - BigComplex(BigFloat(1), BigFloat(0))) < BigFloat("1e-38") ||
           abs(dp + BigComplex(BigFloat(1), BigFloat(0))) < BigFloat("1e-38")));
}

TEST_CASE("doubling the precision moves omega1 below the old error") {
  const CurveData& E = db().lookup("53A1");
  ShortWeierstrass W = to_short_weierstrass(E);
  PrecisionGuard g(110);
  PeriodLattice L40 = period_lattice(W, 40);
  PeriodLattice L80 = period_lattice(W, 80);
  REQUIRE(abs(L40.omega1 - L80.omega1) < pow(BigFloat(10), -36));
  REQUIRE(abs(L40.omega2 - L80.omega2) < pow(BigFloat(10), -36));
}

TEST_CASE("weierstrass function symmetry, periodicity, differential equation") {
  PrecisionGuard g(60);
  const CurveData& E = db().lookup("389A1");
  ShortWeierstrass W = to_short_weierstrass(E);
  PeriodLattice L = period_lattice(W, 50);
  BigFloat A(W.A), B(W.B);

  std::mt19937 rng(99);
  auto rnd = [&]() { return BigFloat(static_cast<int>(rng() % 1000)) / 1000; };
  for (int t = 0; t < 20; ++t) {
    BigComplex z = rnd() * L.omega1 + rnd() * L.omega2;
    if (abs(z) < BigFloat(Rat(1, 100))) continue;
    auto [p, dp] = weierstrass_p(z, L, 50);
    auto [pm, dpm] = weierstrass_p(-z, L, 50);
    REQUIRE(abs(p - pm) < BigFloat("1e-40"));
    REQUIRE(abs(dp + dpm) < BigFloat("1e-38"));
    auto [ps, dps] = weierstrass_p(z + L.omega1, L, 50);
    REQUIRE(abs(p - ps) < BigFloat("1e-40"));
    // (p')^2 = 4p^3 - g2 p - g3 with g2 = -4A, g3 = -4B
    BigComplex lhs = dp * dp;
    BigComplex rhs = BigFloat(4) * p * p * p + BigFloat(4) * A * p +
                     BigComplex(BigFloat(4) * B, BigFloat(0));
    REQUIRE(abs(lhs - rhs) < BigFloat("1e-38") * (BigFloat(1) + abs(rhs)));
  }
}

TEST_CASE("half periods evaluate to the roots of the division cubic") {
  PrecisionGuard g(60);
  const CurveData& E = db().lookup("53A1");
  ShortWeierstrass W = to_short_weierstrass(E);
  PeriodLattice L = period_lattice(W, 50);
  BigFloat A(W.A), B(W.B);
  for (const BigComplex& h : {L.omega1 * BigFloat(0.5), L.omega2 * BigFloat(0.5),
                              (L.omega1 + L.omega2) * BigFloat(0.5)}) {
    auto [p, dp] = weierstrass_p(h, L, 50);
    BigComplex val = p * p * p + BigFloat(A) * p + BigComplex(BigFloat(B), BigFloat(0));
    REQUIRE(abs(val) < BigFloat("1e-35"));
    REQUIRE(abs(dp) < BigFloat("1e-35"));
  }
}

TEST_CASE("phi at tau = 10i needs one term and matches the leading term") {
  PrecisionGuard g(40);
  std::vector<std::int64_t> a{0, 1, -2, -2, 2, -3};
  BigComplex tau(BigFloat(0), BigFloat(10));
  ModularImage img = phi_tau(a, tau, 50);
  REQUIRE(img.terms_used <= 2);
  BigFloat expect = exp(-20 * pi_value());
  REQUIRE(abs(img.z - BigComplex(expect, BigFloat(0))) <
          BigFloat("1e-4") * expect);
  REQUIRE(img.tail_bound < pow(BigFloat(2), -50));
}

TEST_CASE("phi_tau reports the required number of terms when starved") {
  PrecisionGuard g(40);
  std::vector<std::int64_t> a{0, 1, -2};
  BigComplex tau(BigFloat(0), BigFloat(Rat(1, 100)));
  try {
    phi_tau(a, tau, 60);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    REQUIRE(msg.find("a_1..a_") != std::string::npos);
  }
}

TEST_CASE("phi values at Gamma_0(N)-equivalent points differ by a lattice element") {
  PrecisionGuard g(40);
  const CurveData& E = db().lookup("389A1");
  ShortWeierstrass W = to_short_weierstrass(E);
  PeriodLattice L = period_lattice(W, 35);

  // gamma = [195, 1; 389, 2] in Gamma_0(389)
  BigComplex tau(BigFloat(Rat(-1, 200)), BigFloat(Rat(1, 20)));
  BigComplex num = BigFloat(195) * tau + BigComplex(BigFloat(1), BigFloat(0));
  BigComplex den = BigFloat(389) * tau + BigComplex(BigFloat(2), BigFloat(0));
  BigComplex gtau = num / den;

  std::size_t need = phi_tau_terms(gtau.im, 140);
  auto a = an_coeffs(E, need + 8);
  ModularImage z1 = phi_tau(a, tau, 140);
  ModularImage z2 = phi_tau(a, gtau, 140);

  BigComplex diff = z1.z - z2.z;
  BigFloat det = L.omega1.re * L.omega2.im - L.omega1.im * L.omega2.re;
  BigFloat ca = (diff.re * L.omega2.im - diff.im * L.omega2.re) / det;
  BigFloat cb = (L.omega1.re * diff.im - L.omega1.im * diff.re) / det;
  REQUIRE(abs(ca - BigFloat(round_int(ca))) < BigFloat("1e-8"));
  REQUIRE(abs(cb - BigFloat(round_int(cb))) < BigFloat("1e-8"));
}
