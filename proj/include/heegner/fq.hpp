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

#ifndef HEEGNER_FQ_HPP
#define HEEGNER_FQ_HPP

#include <cstdint>
#include <ostream>

#include "heegner/bigfloat.hpp"
#include "heegner/util.hpp"

namespace heegner {

// Prime field element with the modulus carried alongside the value.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;  // 0 marks an uninitialized zero-like element

  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

  static Fp from_int(const Int& n, std::uint64_t prime) {
    Int r = n % Int(prime);
    if (r < 0) r += prime;
    return Fp(r.convert_to<std::uint64_t>(), prime);
  }
  static Fp from_rat(const Rat& q, std::uint64_t prime) {
    Fp den = from_int(denominator(q), prime);
    if (den.v == 0) throw Error("prime divides a denominator in reduction");
    return from_int(numerator(q), prime) * inv(den);
  }

  friend std::uint64_t common_mod(const Fp& a, const Fp& b) {
    if (a.p && b.p && a.p != b.p) throw InternalError("mixed moduli");
    return a.p ? a.p : b.p;
  }
  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t m = common_mod(a, b);
    std::uint64_t s = a.v + b.v;
    return Fp(s >= m ? s - m : s, m);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t m = common_mod(a, b);
    return Fp(a.v >= b.v ? a.v - b.v : a.v + m - b.v, m);
  }
  Fp operator-() const { return Fp(v == 0 ? 0 : p - v, p); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t m = common_mod(a, b);
    return Fp(mulmod_u64(a.v, b.v, m), m);
  }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
  friend Fp inv(const Fp& a) {
    if (a.v == 0) throw Error("inverse of zero in F_p");
    return Fp(powmod_u64(a.v, a.p - 2, a.p), a.p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) {
    return os << a.v << " (mod " << a.p << ")";
  }
};

inline Fp ring_inv(const Fp& a) { return inv(a); }

// Legendre symbol for odd prime p.
inline int legendre(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return powmod_u64(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Tonelli-Shanks square root mod an odd prime; requires (a|p) = 1.
inline std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p % 4 == 3) return powmod_u64(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (legendre(z, p) != -1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powmod_u64(z, q, p);
  std::uint64_t t = powmod_u64(a, q, p);
  std::uint64_t r = powmod_u64(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod_u64(tt, tt, p);
      ++i;
      if (i == m) throw InternalError("sqrt_mod: not a residue");
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mulmod_u64(b, b, p);
    m = i;
    c = mulmod_u64(b, b, p);
    t = mulmod_u64(t, c, p);
    r = mulmod_u64(r, b, p);
  }
  return r;
}

inline int kronecker_symbol(Int a, Int n) {
  // Standard Kronecker symbol (a|n), n may be negative or even.
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -sign;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v % 2 == 1) {
    Int am = a % 8;
    if (am < 0) am += 8;
    if (am == 3 || am == 5) sign = -sign;
    if (am % 2 == 0) return 0;
  }
  a %= n;
  if (a < 0) a += n;
  // Jacobi symbol on odd n
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      Int nm = n % 8;
      if (nm == 3 || nm == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

}  // namespace heegner

#endif  // HEEGNER_FQ_HPP
