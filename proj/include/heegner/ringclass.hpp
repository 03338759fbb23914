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

#ifndef HEEGNER_RINGCLASS_HPP
#define HEEGNER_RINGCLASS_HPP

#include <memory>
#include <vector>

#include "heegner/fq.hpp"
#include "heegner/poly.hpp"
#include "heegner/quadfield.hpp"
#include "heegner/util.hpp"

namespace heegner {

using KPoly = Poly<QuadElem>;

inline KPoly kpoly_from_rational(const Poly<Rat>& p, long D) {
  KPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(QuadElem::rational(c, D));
  return out;
}

// K[c] = K[x]/(F) for K = Q(sqrt(-D)); elements are polynomials in alpha of
// degree < deg F with K coefficients. F is monic (elements are reduced with
// a monic modulus internally).
class RingClassField {
 public:
  RingClassField(long D, long c, KPoly F) : D_(D), c_(c), F_(std::move(F)) {
    if (F_.size() < 2) throw ValidationError("defining polynomial is constant");
    F_ = poly_monic(F_);
  }

  long D() const { return D_; }
  long conductor() const { return c_; }
  const KPoly& modulus() const { return F_; }
  std::size_t degree() const { return F_.size() - 1; }

 private:
  long D_;
  long c_;
  KPoly F_;
};

struct RingClassElem {
  const RingClassField* field = nullptr;
  KPoly rep;

  RingClassElem() = default;
  RingClassElem(const RingClassField& L, KPoly r) : field(&L), rep(std::move(r)) {
    reduce();
  }
  static RingClassElem alpha(const RingClassField& L) {
    return RingClassElem(L, KPoly{QuadElem::rational(Rat(0), L.D()),
                                  QuadElem::rational(Rat(1), L.D())});
  }
  static RingClassElem from_k(const RingClassField& L, const QuadElem& k) {
    return RingClassElem(L, KPoly{k});
  }
  static RingClassElem from_rat(const RingClassField& L, const Rat& q) {
    return from_k(L, QuadElem::rational(q, L.D()));
  }

  void reduce() {
    if (field && rep.size() >= field->modulus().size())
      rep = poly_mod(rep, field->modulus());
    poly_trim(rep);
  }

  bool is_zero() const { return rep.empty(); }
  bool is_constant() const { return rep.size() <= 1; }
  QuadElem constant_value() const {
    if (rep.empty()) return QuadElem::rational(Rat(0), field ? field->D() : 0);
    if (rep.size() > 1) throw Error("element does not lie in K");
    return rep[0];
  }

  const RingClassField* common(const RingClassElem& o) const {
    if (field && o.field && field != o.field)
      throw InternalError("mixed ring class fields");
    return field ? field : o.field;
  }

  friend RingClassElem operator+(const RingClassElem& a, const RingClassElem& b) {
    RingClassElem r;
    r.field = a.common(b);
    r.rep = poly_add(a.rep, b.rep);
    return r;
  }
  friend RingClassElem operator-(const RingClassElem& a, const RingClassElem& b) {
    RingClassElem r;
    r.field = a.common(b);
    r.rep = poly_sub(a.rep, b.rep);
    return r;
  }
  RingClassElem operator-() const {
    RingClassElem r;
    r.field = field;
    r.rep = poly_neg(rep);
    return r;
  }
  friend RingClassElem operator*(const RingClassElem& a, const RingClassElem& b) {
    RingClassElem r;
    r.field = a.common(b);
    r.rep = poly_mul(a.rep, b.rep);
    r.reduce();
    return r;
  }
  friend bool operator==(const RingClassElem& a, const RingClassElem& b) {
    return poly_sub(a.rep, b.rep).empty();
  }

  friend RingClassElem inv(const RingClassElem& a) {
    if (a.is_zero()) throw Error("inverse of zero in ring class field");
    if (!a.field) throw InternalError("inverse of fieldless element");
    auto [g, s, t] = poly_xgcd(a.rep, a.field->modulus());
    (void)t;
    if (poly_deg(g) != 0)
      throw Error(
          "non-invertible nonzero element: the defining polynomial is "
          "reducible over K");
    RingClassElem r;
    r.field = a.field;
    r.rep = s;  // g is normalized to 1 by poly_xgcd
    r.reduce();
    return r;
  }
  friend RingClassElem operator/(const RingClassElem& a, const RingClassElem& b) {
    return a * inv(b);
  }

  BigComplex embed(const std::vector<BigComplex>& alpha_roots, std::size_t i) const {
    BigComplex acc(BigFloat(0), BigFloat(0));
    const BigComplex& x = alpha_roots[i];
    for (std::size_t k = rep.size(); k-- > 0;) acc = acc * x + rep[k].embed();
    return acc;
  }

  // reduction at a degree-1 place (q, s, r): sqrt(-D) -> s, alpha -> r
  Fp reduce_at_place(std::uint64_t q, std::uint64_t s, std::uint64_t r) const {
    Fp acc(0, q);
    for (std::size_t k = rep.size(); k-- > 0;)
      acc = acc * Fp(r, q) + rep[k].reduce(q, s);
    return acc;
  }
};

inline RingClassElem ring_inv(const RingClassElem& a) { return inv(a); }

// Field automorphism over K, pinned by the image of alpha.
struct Automorphism {
  RingClassElem image_of_alpha;
  int order = 0;

  RingClassElem apply(const RingClassElem& e) const {
    const RingClassField& L = *image_of_alpha.field;
    RingClassElem acc = RingClassElem::from_rat(L, Rat(0));
    for (std::size_t k = e.rep.size(); k-- > 0;)
      acc = acc * image_of_alpha + RingClassElem::from_k(L, e.rep[k]);
    return acc;
  }

  Automorphism compose(const Automorphism& inner) const {
    // (this o inner)(alpha) = this(inner(alpha))
    Automorphism r;
    r.image_of_alpha = apply(inner.image_of_alpha);
    return r;
  }
};

inline int automorphism_order(const Automorphism& s, std::size_t max_order) {
  const RingClassField& L = *s.image_of_alpha.field;
  RingClassElem alpha = RingClassElem::alpha(L);
  RingClassElem cur = s.image_of_alpha;
  for (std::size_t n = 1; n <= max_order; ++n) {
    if (cur == alpha) return static_cast<int>(n);
    Automorphism step{cur, 0};
    cur = step.apply(s.image_of_alpha);
  }
  return 0;  // order does not divide max_order
}

}  // namespace heegner

#endif  // HEEGNER_RINGCLASS_HPP
