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

#include "heegner/curve.hpp"
#include "heegner/recognize.hpp"

using namespace heegner;

namespace {

const CurveDatabase& db() {
  static CurveDatabase d(std::string(HEEGNER_DATA_DIR) + "/curves.db");
  return d;
}

// accepts y, its curve negative, and the sqrt(-D)-conjugates of both
bool y_matches_up_to_ambiguity(const CurveData& E, const HeegnerRecord& rec,
                               const Poly<Rat>& want_u, const Poly<Rat>& want_v) {
  auto negate = [&](Poly<Rat> u, Poly<Rat> v) {
    // -y - a1 x - a3 with x = alpha
    u = poly_neg(u);
    v = poly_neg(v);
    Poly<Rat> a1x{Rat(0), E.a1};
    u = poly_sub(u, Poly<Rat>{E.a3});
    u = poly_sub(u, a1x);
    return std::make_pair(u, v);
  };
  std::vector<std::pair<Poly<Rat>, Poly<Rat>>> variants;
  variants.emplace_back(want_u, want_v);
  variants.push_back(negate(want_u, want_v));
  variants.emplace_back(want_u, poly_neg(want_v));
  variants.push_back(negate(want_u, poly_neg(want_v)));
  for (auto& [u, v] : variants)
    if (rec.y_u == u && rec.y_v == v) return true;
  return false;
}

}  // namespace

TEST_CASE("golden 53A1 D=43 c=5: minimal polynomial and exact point") {
  const CurveData& E = db().lookup("53A1");
  PlannerInfo pi;
  pi.route = "override";
  HeegnerRecord rec = embed_and_recognize_auto(E, 43, 5, 70, pi);

  Poly<Rat> wantF = poly_from_ints({864, -3852, 6930, -5855, 1980, -12, 1});
  REQUIRE(rec.F == wantF);
  REQUIRE(rec.h_c == 6);
  REQUIRE(rec.irr_witness != 0);

  Poly<Rat> want_u{Rat(544, 35),   Rat(-372, 7),  Rat(2167, 35),
                   Rat(-7897, 315), Rat(43, 315), Rat(-4, 315)};
  Poly<Rat> want_v;
  REQUIRE(y_matches_up_to_ambiguity(E, rec, want_u, want_v));
  REQUIRE(rec.sigma_order == 6);
}

TEST_CASE("golden 389A1 D=7 c=5: minimal polynomial and exact point") {
  const CurveData& E = db().lookup("389A1");
  PlannerInfo pi;
  pi.route = "override";
  HeegnerRecord rec = embed_and_recognize_auto(E, 7, 5, 70, pi);

  Poly<Rat> wantF{Rat(48771, 1225), Rat(-25944, 245), Rat(3148, 35),
                  Rat(-76, 245),    Rat(-867, 49),    Rat(10, 7),
                  Rat(1)};
  REQUIRE(rec.F == wantF);

  Poly<Rat> want_u{Rat(-18109, 36218)};
  Poly<Rat> want_v{Rat(-33814, 36218),  Rat(70565, 54327), Rat(-10099, 15522),
                   Rat(-12305, 36218), Rat(1030, 7761),   Rat(280, 7761)};
  REQUIRE(y_matches_up_to_ambiguity(E, rec, want_u, want_v));
  REQUIRE(rec.sigma_order == 6);

  // the recognized sigma is an exact root map: F(g(alpha)) = 0 was already
  // verified inside; double-check that x(sigma(y)) is another root of F
  RecordObjects obj(rec);
  RingClassElem xs = obj.sigma.apply(obj.y_min.x);
  RingClassElem val = RingClassElem::from_rat(obj.field, Rat(0));
  for (std::size_t k = rec.F.size(); k-- > 0;)
    val = val * xs + RingClassElem::from_rat(obj.field, rec.F[k]);
  REQUIRE(val.is_zero());
  REQUIRE_FALSE((xs == obj.y_min.x));
}

TEST_CASE("determinism: rerunning at higher precision gives identical output") {
  const CurveData& E = db().lookup("53A1");
  PlannerInfo pi;
  pi.route = "override";
  HeegnerRecord r1 = embed_and_recognize_auto(E, 43, 5, 70, pi);
  HeegnerRecord r2 = embed_and_recognize_auto(E, 43, 5, 140, pi);
  REQUIRE(r1.F == r2.F);
  REQUIRE(r1.y_u == r2.y_u);
  REQUIRE(r1.y_v == r2.y_v);
  REQUIRE(r1.sigma_u == r2.sigma_u);
  REQUIRE(r1.sigma_v == r2.sigma_v);
}

TEST_CASE("vieta cross-check: product of embeddings equals the constant term") {
  const CurveData& E = db().lookup("53A1");
  PlannerInfo pi;
  HeegnerRecord rec = embed_and_recognize_auto(E, 43, 5, 70, pi);
  // product of roots = (-1)^6 F[0] for monic F
  REQUIRE(rec.F[0] == Rat(864));
}

TEST_CASE("trace to K for c = 1 (h_K = 1): the point is K-rational") {
  const CurveData& E = db().lookup("53A1");
  PlannerInfo pi;
  HeegnerRecord rec1 = embed_and_recognize_auto(E, 43, 1, 60, pi);
  REQUIRE(rec1.h_c == 1);
  auto yk = trace_to_K(rec1, E);
  REQUIRE_FALSE(yk.infinity);  // y_K has infinite order (torsion is trivial)

  // the trace lies on the curve over K
  CurveOver<QuadElem> EC{QuadElem::rational(E.a1, 43), QuadElem::rational(E.a2, 43),
                         QuadElem::rational(E.a3, 43), QuadElem::rational(E.a4, 43),
                         QuadElem::rational(E.a6, 43)};
  REQUIRE(EC.on_curve(yk));
}

TEST_CASE("validation: non-Heegner discriminant and shared factors rejected") {
  const CurveData& E = db().lookup("389A1");
  PlannerInfo pi;
  REQUIRE_THROWS_AS(embed_and_recognize(E, 11, 5, 50, pi), ValidationError);
  // c sharing a factor with N*D
  REQUIRE_THROWS_AS(embed_and_recognize(E, 7, 7, 50, pi), ValidationError);
}
