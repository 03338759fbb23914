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

#ifndef HEEGNER_RECOGNIZE_HPP
#define HEEGNER_RECOGNIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "heegner/apcount.hpp"
#include "heegner/contfrac.hpp"
#include "heegner/curve.hpp"
#include "heegner/heegnersets.hpp"
#include "heegner/modparam.hpp"
#include "heegner/periods.hpp"
#include "heegner/point.hpp"
#include "heegner/ringclass.hpp"
#include "heegner/util.hpp"

namespace heegner {

struct PlannerInfo {
  std::string route;  // "zhang", "convexity" or "override"
  double hhat_bound = 0;
  double hx_bound = 0;
  unsigned digits = 0;
  std::size_t n_max = 0;
};

// Everything the downstream derivative/certificate machinery needs about
// one computed Heegner point, with exact data only.
struct HeegnerRecord {
  std::string label;
  long D = 0;
  long c = 0;
  Int beta;
  std::size_t h_c = 0;
  unsigned digits_used = 0;
  std::size_t terms_used = 0;
  std::uint64_t irr_witness = 0;  // degree-1 prime certifying F irreducible over K

  Poly<Rat> F;      // monic, rational (the conjugate set is conjugation-stable)
  Poly<Rat> y_u;    // y(y_c) = y_u(alpha) + sqrt(-D) y_v(alpha), minimal model
  Poly<Rat> y_v;
  Poly<Rat> sigma_u;  // generator of Gal(K[c]/K): alpha -> sigma_u + sqrt(-D) sigma_v
  Poly<Rat> sigma_v;
  int sigma_order = 0;

  PlannerInfo planner;
};

namespace detail {

inline std::vector<BigComplex> expand_from_roots(const std::vector<BigComplex>& roots) {
  std::vector<BigComplex> coeffs{BigComplex(BigFloat(1), BigFloat(0))};
  for (const auto& r : roots) {
    coeffs.insert(coeffs.begin(), BigComplex(BigFloat(0), BigFloat(0)));
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
      coeffs[i] = coeffs[i] - r * coeffs[i + 1];
  }
  return coeffs;  // ascending, monic
}

// Gaussian elimination with partial pivoting.
inline std::vector<BigFloat> solve_linear(std::vector<std::vector<BigFloat>> m,
                                          std::vector<BigFloat> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(m[r][col]) > abs(m[piv][col])) piv = r;
    if (m[piv][col] == 0) throw Error("singular linear system in recognition");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      BigFloat f = m[r][col] / m[col][col];
      if (f == 0) continue;
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<BigFloat> x(n, BigFloat(0));
  for (std::size_t r = n; r-- > 0;) {
    BigFloat acc = rhs[r];
    for (std::size_t k = r + 1; k < n; ++k) acc -= m[r][k] * x[k];
    x[r] = acc / m[r][r];
  }
  return x;
}

inline Rat recognize_or_retry(const BigFloat& value, const Int& max_den,
                              const char* what) {
  auto r = rational_reconstruct(value, max_den);
  if (!r)
    throw RetryWithHigherPrecision(std::string("could not recognize ") + what);
  return r->value;
}

// Frobenius-based irreducibility test for a primitive integer polynomial
// modulo q (q coprime to the leading coefficient and discriminant).
inline bool irreducible_mod_q(const std::vector<Int>& fz, std::uint64_t q) {
  Poly<Fp> f;
  f.reserve(fz.size());
  for (const auto& c : fz) f.push_back(Fp::from_int(c, q));
  poly_trim(f);
  if (f.size() != fz.size()) return false;  // degree dropped
  std::size_t h = f.size() - 1;
  Poly<Fp> x{Fp(0, q), Fp(1, q)};
  // iterated Frobenius: x^(q^k) mod f
  Poly<Fp> frob = poly_powmod(x, Int(q), f);
  std::vector<Poly<Fp>> frob_pows(h + 1);
  frob_pows[1] = frob;
  for (std::size_t k = 2; k <= h; ++k)
    frob_pows[k] = poly_powmod(frob_pows[k - 1], Int(q), f);
  if (!poly_sub(frob_pows[h], x).empty()) return false;  // x^(q^h) != x
  for (std::size_t d = 1; d < h; ++d) {
    if (h % d != 0) continue;
    Poly<Fp> g = poly_gcd(poly_sub(frob_pows[d], x), f);
    if (poly_deg(g) > 0) return false;
  }
  return true;
}

}  // namespace detail

// Degree-1 place of K over q at which F stays irreducible; a sound witness
// that F is irreducible over K (F irreducible over the completion Q_q = K_q
// forces irreducibility over K).
inline std::uint64_t irreducibility_witness(const Poly<Rat>& F, long D) {
  std::vector<Int> fz = poly_primitive_z(F);
  Poly<Rat> dF = poly_derivative(F);
  Rat disc = poly_resultant(F, dF);
  Int bad = numerator(disc) * Int(D) * fz.back();
  for (const auto& c : F) bad *= denominator(c);
  if (bad == 0) throw ValidationError("F is not squarefree");
  for (std::uint64_t q = 3; q < 100000; q += 2) {
    bool isprime = true;
    for (std::uint64_t d = 3; d * d <= q; d += 2)
      if (q % d == 0) {
        isprime = false;
        break;
      }
    if (!isprime) continue;
    if (bad % Int(q) == 0) continue;
    if (kronecker_symbol(Int(-D), Int(q)) != 1) continue;  // need q split in K
    if (detail::irreducible_mod_q(fz, q)) return q;
  }
  return 0;  // reducible (or pathological); caller decides
}

namespace detail {

// K-linear combination recognition: find polynomials (u, v) of degree < h
// with target_i = u(x_i) + i sqrt(D) v(x_i) for every embedding i, then
// rationalize the coefficients.
inline std::pair<Poly<Rat>, Poly<Rat>> recognize_k_poly(
    const std::vector<BigComplex>& alpha_roots,
    const std::vector<BigComplex>& targets, long D, const Int& max_den,
    const char* what) {
  const std::size_t h = alpha_roots.size();
  BigFloat sqrtD = sqrt(BigFloat(D));
  std::vector<std::vector<BigFloat>> M(2 * h, std::vector<BigFloat>(2 * h));
  std::vector<BigFloat> rhs(2 * h);
  for (std::size_t i = 0; i < h; ++i) {
    BigComplex pw(BigFloat(1), BigFloat(0));
    for (std::size_t j = 0; j < h; ++j) {
      M[2 * i][j] = pw.re;
      M[2 * i + 1][j] = pw.im;
      M[2 * i][h + j] = -sqrtD * pw.im;
      M[2 * i + 1][h + j] = sqrtD * pw.re;
      pw = pw * alpha_roots[i];
    }
    rhs[2 * i] = targets[i].re;
    rhs[2 * i + 1] = targets[i].im;
  }
  std::vector<BigFloat> sol = detail::solve_linear(std::move(M), std::move(rhs));
  Poly<Rat> u(h), v(h);
  for (std::size_t j = 0; j < h; ++j) {
    u[j] = detail::recognize_or_retry(sol[j], max_den, what);
    v[j] = detail::recognize_or_retry(sol[h + j], max_den, what);
  }
  poly_trim(u);
  poly_trim(v);
  return {u, v};
}

}  // namespace detail

inline RingClassElem make_k_element(const RingClassField& L, const Poly<Rat>& u,
                                    const Poly<Rat>& v) {
  KPoly rep(std::max(u.size(), v.size()),
            QuadElem::rational(Rat(0), L.D()));
  for (std::size_t j = 0; j < rep.size(); ++j)
    rep[j] = QuadElem{j < u.size() ? u[j] : Rat(0), j < v.size() ? v[j] : Rat(0),
                      L.D()};
  return RingClassElem(L, rep);
}

// Galois generator: match alpha's embeddings along the class-composition
// permutation of a generator class, recognize the root map exactly, and
// verify F(g(alpha)) = 0 with multiplicative order h. Both the generator
// and its inverse permutation are tried (the Artin direction is a fixed
// convention, not observable downstream).
inline Automorphism find_galois_generator(const RingClassField& L,
                                          const std::vector<BigComplex>& alpha_roots,
                                          const PicGroup& pic, const Int& max_den) {
  if (pic.generator_index < 0)
    throw ValidationError("Gal(K[c]/K) is not cyclic: unsupported configuration");
  const std::size_t h = pic.h();
  RingClassElem alpha = RingClassElem::alpha(L);

  std::vector<int> candidates{pic.generator_index,
                              pic.inverse(pic.generator_index)};
  for (int gclass : candidates) {
    std::vector<int> perm = galois_permutation(pic, gclass);
    std::vector<BigComplex> targets(h);
    for (std::size_t i = 0; i < h; ++i) targets[i] = alpha_roots[perm[i]];
    Poly<Rat> gu, gv;
    try {
      std::tie(gu, gv) = detail::recognize_k_poly(alpha_roots, targets, L.D(),
                                                  max_den, "galois generator");
    } catch (const RetryWithHigherPrecision&) {
      continue;
    }
    RingClassElem g = make_k_element(L, gu, gv);
    // exact checks: F(g(alpha)) = 0 in K[c] and order h
    RingClassElem val = RingClassElem::from_rat(L, Rat(0));
    const KPoly& F = L.modulus();
    for (std::size_t k = F.size(); k-- > 0;)
      val = val * g + RingClassElem::from_k(L, F[k]);
    if (!val.is_zero()) continue;
    Automorphism s{g, 0};
    int ord = automorphism_order(s, h);
    if (ord != static_cast<int>(h)) continue;
    s.order = ord;
    return s;
  }
  throw RetryWithHigherPrecision("no Galois generator verified exactly");
}

// Analytic computation and exact recognition of y_c for (E, D, c).
// Coordinates are on the minimal model of E. Throws
// RetryWithHigherPrecision when `digits` was insufficient.
inline HeegnerRecord embed_and_recognize(const CurveData& E, long D, long c,
                                         unsigned digits,
                                         const PlannerInfo& planner) {
  if (!is_heegner_discriminant(E, D))
    throw ValidationError("not a Heegner discriminant for this curve");
  if (gcd(Int(c), E.conductor * Int(D)) != 1)
    throw ValidationError("conductor c must be coprime to N and D");

  PrecisionGuard guard(digits + 20);
  const unsigned bits = bits_for_digits(digits);
  QuadOrder order(D, c);
  PicGroup pic = reduced_forms(order.d_c());
  std::vector<HeegnerTau> taus = heegner_taus(pic, E.conductor);
  const std::size_t h = pic.h();

  ShortWeierstrass W = to_short_weierstrass(E);
  PeriodLattice L = period_lattice(W, digits + 10);

  // modular images of all conjugates (concurrently; joined by index)
  BigFloat min_im(-1);
  for (const auto& t : taus) {
    BigFloat im = t.tau().im;
    if (min_im < 0 || im < min_im) min_im = im;
  }
  std::size_t need = phi_tau_terms(min_im, bits + 8);
  std::vector<std::int64_t> a = an_coeffs(E, need + 4);

  std::vector<std::pair<BigComplex, BigComplex>> xy(h);
  std::function<std::pair<BigComplex, BigComplex>(std::size_t)> embed_one =
      [&](std::size_t i) {
        ModularImage img = phi_tau(a, taus[i].tau(), bits + 8);
        auto [px, py] = weierstrass_p(img.z, L, digits + 10);
        // short -> minimal model: x = x_s + r, y = y_s + s x_s + t
        BigComplex xs = px;
        BigComplex ys = py * BigFloat(0.5);
        BigComplex x = xs + BigComplex(BigFloat(W.r), BigFloat(0));
        BigComplex y = ys + BigComplex(BigFloat(W.s), BigFloat(0)) * xs +
                       BigComplex(BigFloat(W.t), BigFloat(0));
        return std::make_pair(x, y);
      };
  xy = parallel_map<std::pair<BigComplex, BigComplex>>(
      h, BigFloat::default_precision(), embed_one);

  std::vector<BigComplex> xs(h), ys(h);
  for (std::size_t i = 0; i < h; ++i) {
    xs[i] = xy[i].first;
    ys[i] = xy[i].second;
  }

  // recognize F from the full conjugate product
  Int max_den = 1;
  for (unsigned k = 0; k + 3 < digits; k += 3) max_den *= 10;  // 10^(digits/3)
  std::vector<BigComplex> fcoeffs = detail::expand_from_roots(xs);
  BigFloat im_tol = pow(BigFloat(2), -static_cast<int>(bits) / 2);
  Poly<Rat> F(h + 1);
  for (std::size_t j = 0; j <= h; ++j) {
    if (abs(fcoeffs[j].im) > im_tol)
      throw RetryWithHigherPrecision("minimal polynomial coefficient has a "
                                     "non-real drift");
    F[j] = detail::recognize_or_retry(fcoeffs[j].re, max_den,
                                      "minimal polynomial coefficient");
  }
  // invariant: |F(x_i)| stays below 2^(-bits/2) before exact verification
  for (std::size_t i = 0; i < h; ++i) {
    BigComplex v(BigFloat(0), BigFloat(0));
    auto conv = [](const Rat& q) { return BigComplex(BigFloat(q), BigFloat(0)); };
    v = poly_eval_map(F, xs[i], conv);
    if (!(abs(v) < im_tol * (1 + abs(BigFloat(F[0])))))
      throw RetryWithHigherPrecision("recognized polynomial does not vanish "
                                     "at the embeddings");
  }

  std::uint64_t witness = irreducibility_witness(F, D);
  if (witness == 0)
    throw Error("recognized polynomial is reducible over K; wrong beta or "
                "sign convention");

  RingClassField field(D, c, kpoly_from_rational(F, D));
  // y-coordinate: y = y_u(alpha) + sqrt(-D) y_v(alpha)
  auto [yu, yv] =
      detail::recognize_k_poly(xs, ys, D, max_den, "y-coordinate");

  // exact verification: the recognized point satisfies the curve equation
  RingClassElem ax = RingClassElem::alpha(field);
  RingClassElem ay = make_k_element(field, yu, yv);
  CurveOver<RingClassElem> EC{RingClassElem::from_rat(field, E.a1),
                              RingClassElem::from_rat(field, E.a2),
                              RingClassElem::from_rat(field, E.a3),
                              RingClassElem::from_rat(field, E.a4),
                              RingClassElem::from_rat(field, E.a6)};
  if (!EC.on_curve(AffinePoint<RingClassElem>{ax, ay}))
    throw RetryWithHigherPrecision("recognized y-coordinate is not on the curve");

  Automorphism sigma = find_galois_generator(field, xs, pic, max_den);

  HeegnerRecord rec;
  rec.label = E.label;
  rec.D = D;
  rec.c = c;
  rec.beta = taus[pic.identity_index].form.b % (2 * E.conductor);
  rec.h_c = h;
  rec.digits_used = digits;
  rec.terms_used = need;
  rec.irr_witness = witness;
  rec.F = F;
  rec.y_u = yu;
  rec.y_v = yv;
  for (const auto& kq : sigma.image_of_alpha.rep) {
    rec.sigma_u.push_back(kq.u);
    rec.sigma_v.push_back(kq.v);
  }
  poly_trim(rec.sigma_u);
  poly_trim(rec.sigma_v);
  rec.sigma_order = sigma.order;
  rec.planner = planner;
  return rec;
}

// Retry driver: doubles the working precision up to four times.
inline HeegnerRecord embed_and_recognize_auto(const CurveData& E, long D, long c,
                                              unsigned digits,
                                              const PlannerInfo& planner,
                                              int* attempts_out = nullptr) {
  unsigned d = digits;
  for (int attempt = 0; attempt < 5; ++attempt) {
    try {
      HeegnerRecord r = embed_and_recognize(E, D, c, d, planner);
      if (attempts_out) *attempts_out = attempt + 1;
      return r;
    } catch (const RetryWithHigherPrecision&) {
      if (attempt == 4) throw;
      d *= 2;
    }
  }
  throw Error("unreachable");
}

// Rebuild the exact objects from a record.
struct RecordObjects {
  RingClassField field;
  AffinePoint<RingClassElem> y_min;   // on the minimal model
  Automorphism sigma;

  explicit RecordObjects(const HeegnerRecord& rec)
      : field(rec.D, rec.c, kpoly_from_rational(rec.F, rec.D)),
        y_min(),
        sigma() {
    RingClassElem ax = RingClassElem::alpha(field);
    RingClassElem ay = make_k_element(field, rec.y_u, rec.y_v);
    y_min = AffinePoint<RingClassElem>{ax, ay};
    sigma.image_of_alpha = make_k_element(field, rec.sigma_u, rec.sigma_v);
    sigma.order = rec.sigma_order;
  }
};

// Trace of the c = 1 point down to K. With h_K = 1 the point is already
// K-rational; for cyclic class groups the full conjugate sum is taken.
inline AffinePoint<QuadElem> trace_to_K(const HeegnerRecord& rec1,
                                        const CurveData& E) {
  if (rec1.c != 1) throw ValidationError("trace_to_K expects a c = 1 record");
  RecordObjects obj(rec1);
  CurveOver<RingClassElem> EC{
      RingClassElem::from_rat(obj.field, E.a1),
      RingClassElem::from_rat(obj.field, E.a2),
      RingClassElem::from_rat(obj.field, E.a3),
      RingClassElem::from_rat(obj.field, E.a4),
      RingClassElem::from_rat(obj.field, E.a6)};
  AffinePoint<RingClassElem> sum = AffinePoint<RingClassElem>::at_infinity();
  AffinePoint<RingClassElem> cur = obj.y_min;
  for (std::size_t i = 0; i < rec1.h_c; ++i) {
    sum = EC.add(sum, cur);
    if (i + 1 < rec1.h_c) {
      cur = AffinePoint<RingClassElem>{obj.sigma.apply(cur.x),
                                       obj.sigma.apply(cur.y)};
    }
  }
  if (sum.infinity)
    return AffinePoint<QuadElem>::at_infinity();
  if (!sum.x.is_constant() || !sum.y.is_constant())
    throw Error("trace does not lie in K");
  return {sum.x.constant_value(), sum.y.constant_value()};
}

}  // namespace heegner

#endif  // HEEGNER_RECOGNIZE_HPP
