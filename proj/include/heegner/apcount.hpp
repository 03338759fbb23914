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

#ifndef HEEGNER_APCOUNT_HPP
#define HEEGNER_APCOUNT_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "heegner/curve.hpp"
#include "heegner/fq.hpp"
#include "heegner/util.hpp"

namespace heegner {

namespace detail {

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// #E(F_p) by a full character sum over x (odd p).
inline std::int64_t count_points_charsum(const CurveData& E, std::uint64_t p) {
  auto red = [&](const Rat& q) { return Fp::from_rat(q, p).v; };
  std::uint64_t b2 = red(E.b2()), b4 = red(E.b4()), b6 = red(E.b6());
  std::vector<std::uint8_t> is_sq(p, 0);
  for (std::uint64_t x = 0; x < p; ++x) is_sq[mulmod_u64(x, x, p)] = 1;
  std::int64_t sum = 0;
  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t g = mulmod_u64(x, x % p, p);
    g = mulmod_u64(g, (4 * x + b2) % p, p);
    g = (g + mulmod_u64(2 * b4 % p, x, p) + b6) % p;
    if (g == 0)
      continue;  // contributes chi = 0
    sum += is_sq[g] ? 1 : -1;
  }
  return static_cast<std::int64_t>(p) + 1 + sum;
}

struct ShortCurveModP {
  std::uint64_t A, B, p;
  using Pt = std::pair<std::uint64_t, std::uint64_t>;  // affine; infinity = {p, 0}

  Pt infinity() const { return {p, 0}; }
  bool is_inf(const Pt& P) const { return P.first == p; }

  Pt neg(const Pt& P) const {
    if (is_inf(P)) return P;
    return {P.first, P.second ? p - P.second : 0};
  }
  Pt add(const Pt& P, const Pt& Q) const {
    if (is_inf(P)) return Q;
    if (is_inf(Q)) return P;
    std::uint64_t lam;
    if (P.first == Q.first) {
      if ((P.second + Q.second) % p == 0) return infinity();
      std::uint64_t num = (3 * mulmod_u64(P.first, P.first, p) + A) % p;
      std::uint64_t den = (2 * P.second) % p;
      lam = mulmod_u64(num, powmod_u64(den, p - 2, p), p);
    } else {
      std::uint64_t num = (Q.second + p - P.second) % p;
      std::uint64_t den = (Q.first + p - P.first) % p;
      lam = mulmod_u64(num, powmod_u64(den, p - 2, p), p);
    }
    std::uint64_t x3 = (mulmod_u64(lam, lam, p) + 2 * p - P.first - Q.first) % p;
    std::uint64_t y3 =
        (mulmod_u64(lam, (P.first + p - x3) % p, p) + p - P.second) % p;
    return {x3, y3};
  }
  Pt mul(std::uint64_t n, Pt P) const {
    Pt acc = infinity();
    while (n) {
      if (n & 1) acc = add(acc, P);
      P = add(P, P);
      n >>= 1;
    }
    return acc;
  }
};

// All N in [lo, lo + width] with N*P = O, by baby-step giant-step.
inline std::vector<std::uint64_t> bsgs_annihilators(const ShortCurveModP& C,
                                                    ShortCurveModP::Pt P,
                                                    std::uint64_t lo,
                                                    std::uint64_t width) {
  std::uint64_t s = isqrt_u64(width) + 1;
  std::map<ShortCurveModP::Pt, std::uint64_t> baby;
  ShortCurveModP::Pt jP = C.infinity();
  for (std::uint64_t j = 0; j < s; ++j) {
    baby.emplace(jP, j);  // keeps the smallest j on duplicates
    jP = C.add(jP, P);
  }
  ShortCurveModP::Pt G = C.mul(s, P);
  ShortCurveModP::Pt base = C.neg(C.mul(lo, P));
  std::vector<std::uint64_t> hits;
  ShortCurveModP::Pt R = base;
  for (std::uint64_t i = 0; i * s <= width; ++i) {
    auto it = baby.find(R);
    if (it != baby.end()) {
      std::uint64_t k = i * s + it->second;
      if (k <= width) hits.push_back(lo + k);
    }
    R = C.add(R, C.neg(G));
  }
  return hits;
}

inline std::uint64_t point_order(const ShortCurveModP& C,
                                 const ShortCurveModP::Pt& P,
                                 std::uint64_t multiple) {
  std::vector<std::uint64_t> prime_divs;
  std::uint64_t m = multiple;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      prime_divs.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) prime_divs.push_back(m);
  std::uint64_t order = multiple;
  for (std::uint64_t q : prime_divs)
    while (order % q == 0 && C.is_inf(C.mul(order / q, P))) order /= q;
  return order;
}

inline std::int64_t count_points_bsgs(const CurveData& E, std::uint64_t p) {
  ShortCurveModP C;
  C.p = p;
  C.A = Fp::from_rat(-27 * E.c4(), p).v;
  C.B = Fp::from_rat(-54 * E.c6(), p).v;
  std::uint64_t w = isqrt_u64(4 * p);
  std::uint64_t lo = p + 1 - w;
  std::uint64_t width = 2 * w;

  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ p);  // deterministic per prime
  std::uint64_t ell = 1;
  for (int attempt = 0; attempt < 30; ++attempt) {
    std::uint64_t x = rng() % p;
    std::uint64_t z = (mulmod_u64(mulmod_u64(x, x, p), x, p) +
                       mulmod_u64(C.A, x, p) + C.B) % p;
    if (z == 0 || legendre(z, p) != 1) continue;
    ShortCurveModP::Pt P{x, sqrt_mod(z, p)};
    std::vector<std::uint64_t> hits = bsgs_annihilators(C, P, lo, width);
    if (hits.empty()) throw InternalError("bsgs: no group order candidate");
    std::uint64_t order = point_order(C, P, hits[0]);
    ell = std::lcm(ell, order);
    std::uint64_t count = 0, found = 0;
    for (std::uint64_t n = ((lo + ell - 1) / ell) * ell; n <= lo + width; n += ell) {
      ++count;
      found = n;
    }
    if (count == 1) return static_cast<std::int64_t>(found);
  }
  return count_points_charsum(E, p);  // rare fallback
}

}  // namespace detail

// a_p = p + 1 - #E(F_p) at a good odd prime; direct counting below 2^16 and
// baby-step giant-step order finding above.
inline std::int64_t ap_count(const CurveData& E, const Int& p) {
  if (E.conductor % p == 0) throw ValidationError("ap_count: bad reduction at p");
  std::uint64_t pu = p.convert_to<std::uint64_t>();
  if (pu == 2) {
    // exhaustive count on the integral model
    auto red = [&](const Rat& q) { return Fp::from_rat(q, 2).v; };
    std::uint64_t a1 = red(E.a1), a2 = red(E.a2), a3 = red(E.a3),
                  a4 = red(E.a4), a6 = red(E.a6);
    int count = 1;
    for (std::uint64_t x = 0; x < 2; ++x)
      for (std::uint64_t y = 0; y < 2; ++y) {
        std::uint64_t lhs = (y * y + a1 * x * y + a3 * y) % 2;
        std::uint64_t rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
        if (lhs == rhs) ++count;
      }
    return 3 - count;
  }
  if (pu < (1u << 16)) {
    return static_cast<std::int64_t>(pu) + 1 - detail::count_points_charsum(E, pu);
  }
  return static_cast<std::int64_t>(pu) + 1 - detail::count_points_bsgs(E, pu);
}

// Fourier coefficients a_1..a_n via Hecke multiplicativity; prime power
// recursion a_{p^k} = a_p a_{p^{k-1}} - p a_{p^{k-2}} at good p, a_p^k at
// bad p.
inline std::vector<std::int64_t> an_coeffs(const CurveData& E, std::size_t n_max) {
  if (n_max < 1) throw ValidationError("an_coeffs: n_max must be >= 1");
  std::vector<std::uint32_t> spf(n_max + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= n_max; ++i) {
    if (spf[i] == 0) {
      spf[i] = i;
      primes.push_back(i);
    }
    for (std::uint32_t q : primes) {
      if (q > spf[i] || static_cast<std::uint64_t>(q) * i > n_max) break;
      spf[q * i] = q;
    }
  }

  std::vector<std::int64_t> ap_of(primes.size());
  std::function<std::int64_t(std::size_t)> worker = [&](std::size_t idx) {
    Int p(primes[idx]);
    if (E.conductor % p == 0) return static_cast<std::int64_t>(bad_prime_ap(E, p));
    return ap_count(E, p);
  };
  ap_of = parallel_map<std::int64_t>(primes.size(), BigFloat::default_precision(), worker);
  std::map<std::uint32_t, std::int64_t> ap_map;
  for (std::size_t i = 0; i < primes.size(); ++i) ap_map[primes[i]] = ap_of[i];

  std::vector<std::int64_t> a(n_max + 1, 0);
  a[1] = 1;
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::uint32_t p = spf[n];
    std::size_t pk = p, m = n / p;
    while (m % p == 0) {
      pk *= p;
      m /= p;
    }
    if (m > 1) {
      a[n] = a[pk] * a[m];
      continue;
    }
    // n = p^k
    std::int64_t ap = ap_map[p];
    if (E.conductor % Int(p) == 0) {
      std::int64_t v = 1;
      for (std::size_t q = n; q > 1; q /= p) v *= ap;
      a[n] = v;
    } else if (n == p) {
      a[n] = ap;
    } else {
      std::size_t pk1 = n / p, pk2 = n / p / p;
      a[n] = ap * a[pk1] - static_cast<std::int64_t>(p) * a[pk2];
    }
  }
  return a;
}

}  // namespace heegner

#endif  // HEEGNER_APCOUNT_HPP
