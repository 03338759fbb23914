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

#include "heegner/recognize.hpp"
#include "heegner/ringclass.hpp"

using namespace heegner;

namespace {

Poly<Rat> golden_53a1_F() {
  return poly_from_ints({864, -3852, 6930, -5855, 1980, -12, 1});
}

}  // namespace

TEST_CASE("quadratic field arithmetic and conjugation involution") {
  QuadElem a{Rat(2), Rat(3), 7};      // 2 + 3 sqrt(-7)
  QuadElem b{Rat(-1), Rat(1, 2), 7};  // -1 + 1/2 sqrt(-7)
  REQUIRE(a.conj().conj() == a);
  REQUIRE((a * b).conj() == a.conj() * b.conj());
  REQUIRE(a.norm() == Rat(4 + 7 * 9));
  REQUIRE(a * inv(a) == QuadElem::rational(Rat(1), 7));
  REQUIRE_THROWS(inv(QuadElem::rational(Rat(0), 7)));
}

TEST_CASE("ring class field arithmetic in K[x]/(F) for the 53A1 field") {
  RingClassField L(43, 5, kpoly_from_rational(golden_53a1_F(), 43));
  REQUIRE(L.degree() == 6);
  RingClassElem alpha = RingClassElem::alpha(L);
  RingClassElem one = RingClassElem::from_rat(L, Rat(1));

  REQUIRE(alpha * inv(alpha) == one);
  REQUIRE((alpha + one) - one == alpha);

  // norm(alpha) = (-1)^6 * constant term / leading = 864 exactly:
  // alpha * (F - constant)/(-constant * alpha) ... check via resultant
  Poly<Rat> F = golden_53a1_F();
  Poly<Rat> x{Rat(0), Rat(1)};
  Rat norm = poly_resultant(F, x);  // res(F, x) = lead(x)^6 * prod F at roots of x
  // res(F, x) = F(0) up to sign conventions; assert the paper value 864
  REQUIRE(abs(numerator(norm)) == 864);
  REQUIRE(denominator(norm) == 1);
}

TEST_CASE("inverse failure names a reducible modulus") {
  Poly<Rat> reducible{Rat(-1), Rat(0), Rat(1)};  // x^2 - 1
  RingClassField L(7, 1, kpoly_from_rational(reducible, 7));
  RingClassElem bad(L, KPoly{QuadElem::rational(Rat(1), 7),
                             QuadElem::rational(Rat(1), 7)});  // alpha + 1
  try {
    inv(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    REQUIRE(std::string(e.what()).find("reducible") != std::string::npos);
  }
  REQUIRE_THROWS(inv(RingClassElem::from_rat(L, Rat(0))));
}

TEST_CASE("automorphism machinery on a cyclotomic-style field") {
  // K = Q(sqrt(-7)), F = x^2 + x + 2 (roots (-1 +- sqrt(-7))/2 lie in K...)
  // use instead F = x^2 - 2, sigma: alpha -> -alpha of order 2
  Poly<Rat> F{Rat(-2), Rat(0), Rat(1)};
  RingClassField L(7, 1, kpoly_from_rational(F, 7));
  RingClassElem alpha = RingClassElem::alpha(L);
  Automorphism s{-alpha, 0};
  REQUIRE(automorphism_order(s, 2) == 2);
  // sigma(alpha^2) = alpha^2 (fixed field contains alpha^2 = 2)
  REQUIRE(s.apply(alpha * alpha) == alpha * alpha);
  Automorphism id{alpha, 0};
  REQUIRE(automorphism_order(id, 2) == 1);
  RingClassElem e = alpha + RingClassElem::from_rat(L, Rat(3));
  REQUIRE(id.apply(e) == e);
}

TEST_CASE("embeddings of ring class elements match the root data") {
  PrecisionGuard g(60);
  Poly<Rat> F{Rat(-2), Rat(0), Rat(1)};
  RingClassField L(7, 1, kpoly_from_rational(F, 7));
  std::vector<BigComplex> roots{BigComplex(sqrt(BigFloat(2)), BigFloat(0)),
                                BigComplex(-sqrt(BigFloat(2)), BigFloat(0))};
  RingClassElem e = make_k_element(L, Poly<Rat>{Rat(1), Rat(2)},  // 1 + 2a
                                   Poly<Rat>{Rat(0), Rat(1)});    // + sqrt(-7) a
  BigComplex v0 = e.embed(roots, 0);
  BigComplex want0 = BigComplex(BigFloat(1) + 2 * sqrt(BigFloat(2)),
                                sqrt(BigFloat(7)) * sqrt(BigFloat(2)));
  REQUIRE(abs(v0 - want0) < BigFloat("1e-50"));
}

TEST_CASE("reduction of elements at a degree-1 place") {
  // q = 11: -7 = 4 mod 11, s = 2; F = x^2 - 2 has root r with r^2 = 2 mod 11
  // 2 is a QR mod 11? 6^2 = 36 = 3, 4^2=5, 5^2=3, 7^2=5 ... squares mod 11:
  // {1,4,9,5,3}: 2 is not a square mod 11, pick q = 7: squares {1,4,2}: r = 3,
  // s: -7 = 0 mod 7 (ramified) -> use q = 23: -7 = 16, s = 4; 2 = 5^2 mod 23
  Poly<Rat> F{Rat(-2), Rat(0), Rat(1)};
  RingClassField L(7, 1, kpoly_from_rational(F, 7));
  RingClassElem e = make_k_element(L, Poly<Rat>{Rat(1), Rat(2)},
                                   Poly<Rat>{Rat(0), Rat(1)});
  std::uint64_t q = 23, s = 4, r = 5;
  REQUIRE((s * s + 7) % q == 0);
  REQUIRE((r * r) % q == 2);
  Fp red = e.reduce_at_place(q, s, r);
  // 1 + 2r + s*r = 1 + 10 + 20 = 31 = 8 mod 23
  REQUIRE(red.v == 8);
}
