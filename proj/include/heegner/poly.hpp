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

#ifndef HEEGNER_POLY_HPP
#define HEEGNER_POLY_HPP

#include <algorithm>
#include <vector>

#include "heegner/bigfloat.hpp"
#include "heegner/util.hpp"

namespace heegner {

// Dense univariate polynomials, coefficients ascending. The zero polynomial
// is the empty vector. Coefficient types must support +, -, *, ==, and,
// where division is used, a ring_inv() overload found by ADL.
template <class T>
using Poly = std::vector<T>;

inline Rat ring_inv(const Rat& x) {
  if (x == 0) throw Error("inverse of zero");
  return 1 / x;
}
inline BigFloat ring_inv(const BigFloat& x) { return 1 / x; }
inline BigComplex ring_inv(const BigComplex& x) {
  return BigComplex(BigFloat(1), BigFloat(0)) / x;
}

template <class T>
void poly_trim(Poly<T>& p) {
  while (!p.empty() && p.back() == p.back() - p.back()) p.pop_back();
}

template <class T>
int poly_deg(const Poly<T>& p) {
  return static_cast<int>(p.size()) - 1;  // deg(0) = -1
}

template <class T>
Poly<T> poly_add(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size())
      r[i] = a[i] + b[i];
    else if (i < a.size())
      r[i] = a[i];
    else
      r[i] = b[i];
  }
  poly_trim(r);
  return r;
}

template <class T>
Poly<T> poly_neg(const Poly<T>& a) {
  Poly<T> r = a;
  for (auto& c : r) c = c - (c + c);  // -c without requiring unary minus
  return r;
}

template <class T>
Poly<T> poly_sub(const Poly<T>& a, const Poly<T>& b) {
  return poly_add(a, poly_neg(b));
}

template <class T>
Poly<T> poly_mul(const Poly<T>& a, const Poly<T>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<T> r(a.size() + b.size() - 1, a[0] - a[0]);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  poly_trim(r);
  return r;
}

template <class T>
Poly<T> poly_scale(const Poly<T>& a, const T& c) {
  Poly<T> r = a;
  for (auto& x : r) x = x * c;
  poly_trim(r);
  return r;
}

template <class T>
T poly_eval(const Poly<T>& p, const T& x) {
  T acc = x - x;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Evaluate a polynomial with coefficients convertible into the point's ring.
template <class T, class S, class Conv>
S poly_eval_map(const Poly<T>& p, const S& x, Conv conv) {
  S acc = x - x;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + conv(p[i]);
  return acc;
}

template <class T>
Poly<T> poly_derivative(const Poly<T>& p) {
  if (p.size() <= 1) return {};
  Poly<T> r(p.size() - 1, p[0] - p[0]);
  for (std::size_t i = 1; i < p.size(); ++i) {
    T k = p[0] - p[0];
    for (std::size_t j = 0; j < i; ++j) k = k + p[i];  // i * p[i]
    r[i - 1] = k;
  }
  poly_trim(r);
  return r;
}

// Division with remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> poly_divrem(const Poly<T>& a, const Poly<T>& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  Poly<T> r = a;
  if (a.size() < b.size()) return {{}, r};
  T zero = b[0] - b[0];
  Poly<T> q(a.size() - b.size() + 1, zero);
  T lead_inv = ring_inv(b.back());
  for (int i = static_cast<int>(a.size() - b.size()); i >= 0; --i) {
    T c = r[i + b.size() - 1] * lead_inv;
    if (c == zero) continue;
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = r[i + j] - c * b[j];
  }
  poly_trim(q);
  poly_trim(r);
  return {q, r};
}

template <class T>
Poly<T> poly_mod(const Poly<T>& a, const Poly<T>& b) {
  return poly_divrem(a, b).second;
}

template <class T>
Poly<T> poly_monic(const Poly<T>& a) {
  if (a.empty()) return a;
  return poly_scale(a, ring_inv(a.back()));
}

template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  while (!b.empty()) {
    Poly<T> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : poly_monic(a);
}

// Extended gcd over a field: returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> poly_xgcd(Poly<T> a, Poly<T> b) {
  if (a.empty() && b.empty()) return {a, a, b};
  T one = a.empty() ? ring_inv(b.back()) * b.back() : ring_inv(a.back()) * a.back();
  Poly<T> s0 = {one}, s1 = {}, t0 = {}, t1 = {one};
  while (!b.empty()) {
    auto [q, r] = poly_divrem(a, b);
    a = std::move(b);
    b = std::move(r);
    Poly<T> s2 = poly_sub(s0, poly_mul(q, s1));
    Poly<T> t2 = poly_sub(t0, poly_mul(q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  T li = ring_inv(a.back());
  return {poly_scale(a, li), poly_scale(s0, li), poly_scale(t0, li)};
}

template <class T>
Poly<T> poly_powmod(Poly<T> base, Int e, const Poly<T>& mod) {
  T one = ring_inv(mod.back()) * mod.back();
  Poly<T> r = {one};
  base = poly_mod(base, mod);
  while (e > 0) {
    if ((e & 1) != 0) r = poly_mod(poly_mul(r, base), mod);
    base = poly_mod(poly_mul(base, base), mod);
    e >>= 1;
  }
  return r;
}

// Resultant over a field, via the Euclidean remainder sequence.
template <class T>
T poly_resultant(Poly<T> a, Poly<T> b) {
  if (a.empty() || b.empty()) throw Error("resultant of zero polynomial");
  T one = ring_inv(a.back()) * a.back();
  T res = one;
  bool zero = false;
  while (true) {
    int da = poly_deg(a), db = poly_deg(b);
    if (db < 0) {
      zero = da > 0;
      break;
    }
    if (db == 0) {
      T acc = one;
      for (int i = 0; i < da; ++i) acc = acc * b[0];
      res = res * acc;
      break;
    }
    Poly<T> r = poly_mod(a, b);
    int dr = poly_deg(r);
    // res *= lc(b)^(deg a - deg r) * (-1)^(deg a * deg b)
    T acc = one;
    for (int i = 0; i < da - dr; ++i) acc = acc * b.back();
    if ((da % 2) && (db % 2)) acc = acc - (acc + acc);
    res = res * acc;
    a = std::move(b);
    b = std::move(r);
  }
  if (zero) return one - one;
  return res;
}

inline Poly<Rat> poly_from_ints(const std::vector<long>& v) {
  Poly<Rat> p;
  p.reserve(v.size());
  for (long c : v) p.emplace_back(c);
  poly_trim(p);
  return p;
}

// Clears denominators and divides by integer content; sign chosen so the
// leading coefficient is positive.
inline std::vector<Int> poly_primitive_z(const Poly<Rat>& p) {
  Int den = 1;
  for (const auto& c : p) den = lcm(den, denominator(c));
  std::vector<Int> z;
  z.reserve(p.size());
  for (const auto& c : p) z.push_back(numerator(c) * (den / denominator(c)));
  Int g = 0;
  for (const auto& c : z) g = gcd(g, c);
  if (g != 0) {
    if (!z.empty() && z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
  }
  return z;
}

}  // namespace heegner

#endif  // HEEGNER_POLY_HPP
