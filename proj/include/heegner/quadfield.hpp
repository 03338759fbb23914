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

#ifndef HEEGNER_QUADFIELD_HPP
#define HEEGNER_QUADFIELD_HPP

#include <ostream>
#include <sstream>

#include "heegner/bigfloat.hpp"
#include "heegner/fq.hpp"
#include "heegner/util.hpp"

namespace heegner {

// Element u + v*sqrt(-D) of the imaginary quadratic field K = Q(sqrt(-D)).
// D > 0 travels with the element; mixing fields is an error.
struct QuadElem {
  Rat u, v;
  long D = 0;  // 0 acts as a wildcard for zero-like temporaries

  QuadElem() = default;
  QuadElem(Rat uu, Rat vv, long d) : u(std::move(uu)), v(std::move(vv)), D(d) {}
  static QuadElem rational(const Rat& q, long d) { return {q, Rat(0), d}; }

  bool is_rational() const { return v == 0; }

  friend long common_d(const QuadElem& a, const QuadElem& b) {
    if (a.D && b.D && a.D != b.D) throw InternalError("mixed quadratic fields");
    return a.D ? a.D : b.D;
  }
  friend QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    return {a.u + b.u, a.v + b.v, common_d(a, b)};
  }
  friend QuadElem operator-(const QuadElem& a, const QuadElem& b) {
    return {a.u - b.u, a.v - b.v, common_d(a, b)};
  }
  QuadElem operator-() const { return {-u, -v, D}; }
  friend QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    long d = common_d(a, b);
    return {a.u * b.u - Rat(d) * a.v * b.v, a.u * b.v + a.v * b.u, d};
  }
  friend bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.u == b.u && a.v == b.v;
  }
  QuadElem conj() const { return {u, -v, D}; }
  Rat norm() const { return u * u + Rat(D) * v * v; }

  friend QuadElem inv(const QuadElem& a) {
    Rat n = a.norm();
    if (n == 0) throw Error("inverse of zero in quadratic field");
    QuadElem c = a.conj();
    return {c.u / n, c.v / n, a.D};
  }
  friend QuadElem operator/(const QuadElem& a, const QuadElem& b) {
    return a * inv(b);
  }

  BigComplex embed() const {
    // fixed embedding: sqrt(-D) -> +i*sqrt(D)
    return BigComplex(BigFloat(u), BigFloat(v) * sqrt(BigFloat(D)));
  }

  // Reduction at a degree-1 place: sqrt(-D) -> s where s^2 = -D (mod q).
  Fp reduce(std::uint64_t q, std::uint64_t s) const {
    return Fp::from_rat(u, q) + Fp::from_rat(v, q) * Fp(s, q);
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadElem& a) {
    if (a.v == 0) return os << a.u;
    return os << a.u << "+" << a.v << "*sqrt(-" << a.D << ")";
  }
};

inline QuadElem ring_inv(const QuadElem& a) { return inv(a); }

inline QuadElem operator*(const Rat& c, const QuadElem& a) {
  return {c * a.u, c * a.v, a.D};
}

}  // namespace heegner

#endif  // HEEGNER_QUADFIELD_HPP
