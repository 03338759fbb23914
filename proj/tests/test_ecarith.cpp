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
#include "heegner/divpoly.hpp"
#include "heegner/fq.hpp"
#include "heegner/point.hpp"

using namespace heegner;

namespace {

const CurveDatabase& db() {
  static CurveDatabase d(std::string(HEEGNER_DATA_DIR) + "/curves.db");
  return d;
}

AffinePoint<Fp> random_point(const CurveOver<Fp>& C, std::uint64_t p,
                             std::mt19937& rng) {
  for (;;) {
    std::uint64_t x = rng() % p;
    // y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6, complete the square
    Fp fx = ((Fp(x, p) + C.a2) * Fp(x, p) + C.a4) * Fp(x, p) + C.a6;
    Fp h = C.a1 * Fp(x, p) + C.a3;
    Fp disc = h * h + fx + fx + fx + fx;  // h^2 + 4 f(x)
    if (disc.v == 0) {
      Fp y = (disc - disc) - h * Fp(powmod_u64(2, p - 2, p), p);
      return {Fp(x, p), y};
    }
    if (legendre(disc.v, p) != 1) continue;
    Fp s(sqrt_mod(disc.v, p), p);
    Fp y = (s - h) * Fp(powmod_u64(2, p - 2, p), p);
    return {Fp(x, p), y};
  }
}

}  // namespace

TEST_CASE("short Weierstrass form of the paper curves") {
  const CurveData& e389 = db().lookup("389A1");
  ShortWeierstrass w = to_short_weierstrass(e389);
  REQUIRE(w.A == Rat(-7, 3));
  REQUIRE(w.B == Rat(107, 108));

  const CurveData& e53 = db().lookup("53A1");
  ShortWeierstrass wi = to_short_weierstrass_integral(e53);
  REQUIRE(wi.A == Rat(405));
  REQUIRE(wi.B == Rat(16038));

  CurveData shortcurve;
  shortcurve.label = "short";
  shortcurve.a1 = shortcurve.a2 = shortcurve.a3 = 0;
  shortcurve.a4 = 0;
  shortcurve.a6 = 1;
  shortcurve.conductor = 36;
  ShortWeierstrass ws = to_short_weierstrass(shortcurve);
  REQUIRE(ws.A == 0);
  REQUIRE(ws.B == 1);
  REQUIRE(ws.r == 0);
  REQUIRE(ws.s == 0);
  REQUIRE(ws.t == 0);
}

TEST_CASE("short form transform round-trips points") {
  const CurveData& E = db().lookup("389A1");
  ShortWeierstrass w = to_short_weierstrass(E);
  // (0,0) lies on 389A1; map to the short model and check the equation
  Rat x(0), y(0);
  Rat xs = (x - w.r) / (w.u * w.u);
  Rat ys = (y - w.s * w.u * w.u * xs - w.t) / (w.u * w.u * w.u);
  REQUIRE(ys * ys == xs * xs * xs + w.A * xs + w.B);
  // and back
  REQUIRE(w.u * w.u * xs + w.r == x);
  REQUIRE(w.u * w.u * w.u * ys + w.s * w.u * w.u * xs + w.t == y);
}

TEST_CASE("group law basics over F_101") {
  std::mt19937 rng(42);
  std::uint64_t p = 101;
  CurveOver<Fp> C{Fp(0, p), Fp(0, p), Fp(0, p), Fp(2, p), Fp(3, p)};
  AffinePoint<Fp> P = random_point(C, p, rng);
  REQUIRE(C.on_curve(P));

  AffinePoint<Fp> inf = AffinePoint<Fp>::at_infinity();
  auto sum = C.add(P, inf);
  REQUIRE((sum.x == P.x && sum.y == P.y));
  REQUIRE(C.add(P, C.neg(P)).infinity);

  AffinePoint<Fp> acc = inf;
  for (int i = 0; i < 7; ++i) acc = C.add(acc, P);
  auto mulP = C.mul(Int(7), P);
  REQUIRE(((mulP.infinity && acc.infinity) ||
           (mulP.x == acc.x && mulP.y == acc.y)));
}

TEST_CASE("group law axioms on random triples") {
  std::mt19937 rng(4242);
  for (std::uint64_t p : {101ull, 4099ull}) {
    CurveOver<Fp> C{Fp(0, p), Fp(0, p), Fp(0, p), Fp(5, p), Fp(7, p)};
    for (int t = 0; t < 20; ++t) {
      auto P = random_point(C, p, rng);
      auto Q = random_point(C, p, rng);
      auto R = random_point(C, p, rng);
      auto lhs = C.add(C.add(P, Q), R);
      auto rhs = C.add(P, C.add(Q, R));
      REQUIRE(lhs.infinity == rhs.infinity);
      if (!lhs.infinity) {
        REQUIRE(lhs.x == rhs.x);
        REQUIRE(lhs.y == rhs.y);
      }
      REQUIRE(C.on_curve(lhs));
    }
  }
}

TEST_CASE("a_p values printed in the modular form expansions") {
  REQUIRE(ap_count(db().lookup("389A1"), Int(5)) == -3);
  REQUIRE(ap_count(db().lookup("53A1"), Int(7)) == -4);
  REQUIRE(ap_count(db().lookup("709A1"), Int(3)) == -1);
}

TEST_CASE("ap_count rejects bad reduction primes") {
  REQUIRE_THROWS_AS(ap_count(db().lookup("389A1"), Int(389)), ValidationError);
}

TEST_CASE("first ten Fourier coefficients match the printed expansions") {
  auto a389 = an_coeffs(db().lookup("389A1"), 10);
  std::vector<std::int64_t> want389{0, 1, -2, -2, 2, -3, 4, -5, 0, 1, 6};
  REQUIRE(a389 == want389);

  auto a718 = an_coeffs(db().lookup("718B1"), 10);
  std::vector<std::int64_t> want718{0, 1, -1, -2, 1, -3, 2, -5, -1, 1, 3};
  REQUIRE(a718 == want718);

  auto a53 = an_coeffs(db().lookup("53A1"), 9);
  std::vector<std::int64_t> want53{0, 1, -1, -3, -1, 0, 3, -4, 3, 6};
  REQUIRE(a53 == want53);

  auto a709 = an_coeffs(db().lookup("709A1"), 9);
  std::vector<std::int64_t> want709{0, 1, -2, -1, 2, -3, 2, -4, 0, -2};
  REQUIRE(a709 == want709);
}

TEST_CASE("bad prime recursion gives a_4 = a_2^2 when 2 divides N") {
  auto a = an_coeffs(db().lookup("718B1"), 8);
  REQUIRE(a[4] == a[2] * a[2]);
  REQUIRE(a[8] == a[2] * a[2] * a[2]);
}

TEST_CASE("Hasse bound and multiplicativity on an initial segment") {
  const CurveData& E = db().lookup("389A1");
  auto a = an_coeffs(E, 300);
  for (std::size_t p : {3u, 5u, 7u, 11u, 13u, 101u, 211u}) {
    REQUIRE(static_cast<double>(a[p]) * a[p] <= 4.0 * p);
  }
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {4, 5}, {9, 10},
                                                      {7, 12}, {11, 13}}) {
    REQUIRE(a[m] * a[n] == a[m * n]);
  }
}

TEST_CASE("bsgs point counting agrees with the character sum") {
  const CurveData& E = db().lookup("53A1");
  for (std::uint64_t p : {65537ull, 65539ull, 100003ull}) {
    std::int64_t direct =
        static_cast<std::int64_t>(p) + 1 - detail::count_points_charsum(E, p);
    std::int64_t fast =
        static_cast<std::int64_t>(p) + 1 - detail::count_points_bsgs(E, p);
    REQUIRE(direct == fast);
  }
}

TEST_CASE("division polynomial seeds and printed psi_3") {
  Rat A(-7, 3), B(107, 108);
  auto d1 = division_polys(A, B, 1);
  REQUIRE(d1.psi.x_part == Poly<Rat>{Rat(1)});
  REQUIRE(d1.phi == (Poly<Rat>{Rat(0), Rat(1)}));  // phi_1 = x

  auto d3 = division_polys(A, B, 3);
  Poly<Rat> want{-A * A, 12 * B, 6 * A, Rat(0), Rat(3)};
  REQUIRE(d3.psi.x_part == want);
  REQUIRE_FALSE(d3.psi.has_y);
}

TEST_CASE("phi_3 matches the expansion implied by the recursions") {
  // x^9 - 12A x^7 - 96B x^6 + 30A^2 x^5 - 24AB x^4 + (36A^3 + 48B^2) x^3
  //   + 48A^2B x^2 + (9A^4 + 96AB^2) x + (8A^3B + 64B^3)
  std::vector<std::pair<Rat, Rat>> samples{{Rat(-7, 3), Rat(107, 108)},
                                           {Rat(2), Rat(5)},
                                           {Rat(-1, 2), Rat(3, 7)}};
  for (auto& [A, B] : samples) {
    Poly<Rat> expect{8 * A * A * A * B + 64 * B * B * B,
                     9 * A * A * A * A + 96 * A * B * B,
                     48 * A * A * B,
                     36 * A * A * A + 48 * B * B,
                     -24 * A * B,
                     30 * A * A,
                     -96 * B,
                     -12 * A,
                     Rat(0),
                     Rat(1)};
    auto d3 = division_polys(A, B, 3);
    REQUIRE(d3.phi == expect);
  }
}

TEST_CASE("division polynomial degrees and leading terms") {
  Rat A(3), B(-2);
  for (long m = 2; m <= 9; ++m) {
    auto d = division_polys(A, B, m);
    REQUIRE(poly_deg(d.phi) == m * m);
    REQUIRE(d.phi.back() == 1);
    // psi_m^2 as an x-polynomial: degree m^2 - 1, leading coefficient m^2
    Poly<Rat> psisq = poly_mul(d.psi.x_part, d.psi.x_part);
    if (d.psi.has_y) psisq = poly_mul(psisq, Poly<Rat>{B, A, Rat(0), Rat(1)});
    REQUIRE(poly_deg(psisq) == m * m - 1);
    REQUIRE(psisq.back() == Rat(m * m));
  }
}

TEST_CASE("multiplication formula agrees with repeated addition") {
  std::mt19937 rng(2024);
  int checked = 0;
  while (checked < 120) {
    std::uint64_t p = 10007;
    std::uint64_t Au = rng() % p, Bu = rng() % p;
    // reject singular: 4A^3 + 27B^2 = 0
    std::uint64_t disc = (4 * powmod_u64(Au, 3, p) + 27 * mulmod_u64(Bu, Bu, p)) % p;
    if (disc == 0) continue;
    CurveOver<Fp> C = short_curve(Fp(Au, p), Fp(Bu, p));
    auto P = random_point(C, p, rng);
    long m = 2 + static_cast<long>(rng() % 8);  // 2..9
    auto D = division_polys(Rat(Au), Rat(Bu), m);
    auto conv = [p](const Rat& c) { return Fp::from_rat(c, p); };
    auto fast = mul_by_m_formula(P, D, conv);
    auto slow = C.mul(Int(m), P);
    REQUIRE(fast.infinity == slow.infinity);
    if (!fast.infinity) {
      REQUIRE(fast.x == slow.x);
      REQUIRE(fast.y == slow.y);
    }
    ++checked;
  }
}

TEST_CASE("triple of a 3-torsion point is infinity via the formula") {
  // brute-force search for 3-torsion over F_7 short curves
  std::uint64_t p = 7;
  bool found = false;
  for (std::uint64_t Au = 0; Au < p && !found; ++Au)
    for (std::uint64_t Bu = 0; Bu < p && !found; ++Bu) {
      if ((4 * powmod_u64(Au, 3, p) + 27 * mulmod_u64(Bu, Bu, p)) % p == 0)
        continue;
      CurveOver<Fp> C = short_curve(Fp(Au, p), Fp(Bu, p));
      for (std::uint64_t x = 0; x < p && !found; ++x)
        for (std::uint64_t y = 0; y < p && !found; ++y) {
          AffinePoint<Fp> P{Fp(x, p), Fp(y, p)};
          if (!C.on_curve(P)) continue;
          auto twoP = C.add(P, P);
          auto threeP = C.add(twoP, P);
          if (!threeP.infinity) continue;
          found = true;
          auto D = division_polys(Rat(Au), Rat(Bu), 3);
          auto conv = [p](const Rat& c) { return Fp::from_rat(c, p); };
          REQUIRE(mul_by_m_formula(P, D, conv).infinity);
        }
    }
  REQUIRE(found);
}

TEST_CASE("division_polys validates m") {
  REQUIRE_THROWS_AS(division_polys(Rat(1), Rat(1), 0), ValidationError);
}
