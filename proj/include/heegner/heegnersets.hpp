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

#ifndef HEEGNER_HEEGNERSETS_HPP
#define HEEGNER_HEEGNERSETS_HPP

#include <limits>
#include <vector>

#include "heegner/apcount.hpp"
#include "heegner/curve.hpp"
#include "heegner/fq.hpp"
#include "heegner/quadform.hpp"
#include "heegner/util.hpp"

namespace heegner {

// The order O_c = Z + c O_K of conductor c in K = Q(sqrt(-D)).
struct QuadOrder {
  long D = 0;
  long c = 1;

  QuadOrder(long d, long cond) : D(d), c(cond) {
    if (!is_fundamental(-Int(d)))
      throw ValidationError("-D is not a fundamental discriminant");
    if (d == 3 || d == 4) throw ValidationError("D = 3, 4 are excluded");
    if (cond < 1) throw ValidationError("conductor must be positive");
  }

  Int d_c() const { return -Int(c) * Int(c) * Int(D); }

  static bool is_fundamental(const Int& disc) {
    if (disc >= 0) return false;
    Int m = ((disc % 4) + 4) % 4;
    auto squarefree = [](Int n) {
      if (n < 0) n = -n;
      for (Int q = 2; q * q <= n; ++q)
        if (n % (q * q) == 0) return false;
      return true;
    };
    if (m == 1) return squarefree(disc);
    if (m != 0) return false;
    Int quarter = disc / 4;
    Int qm = ((quarter % 4) + 4) % 4;
    return (qm == 2 || qm == 3) && squarefree(quarter);
  }
};

inline std::vector<Int> prime_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> out;
  for (Int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_heegner_discriminant(const CurveData& E, long D) {
  QuadOrder order(D, 1);  // validates fundamentality and D != 3,4
  for (const Int& q : prime_divisors(E.conductor))
    if (kronecker_symbol(-Int(D), q) != 1) return false;
  return true;
}

// tau = (-b + sqrt(d_c)) / (2a) for a form with N | a, b = beta (mod 2N).
struct HeegnerTau {
  ClassForm form;   // level-adapted representative, not reduced
  int class_index;  // position in the PicGroup form list

  BigComplex tau() const {
    BigFloat im = sqrt(BigFloat(-form.disc())) / BigFloat(2 * form.a);
    BigFloat re = BigFloat(-form.b) / BigFloat(2 * form.a);
    return {re, im};
  }
};

// Smallest nonnegative square root of d_c mod 4N; throws when none exists
// (the Heegner hypothesis guarantees one).
inline Int heegner_beta(const Int& d_c, const Int& N) {
  Int four_n = 4 * N;
  for (Int b = 0; b < 2 * N; ++b) {
    if (((b * b - d_c) % four_n) == 0) return b;
  }
  throw ValidationError("no square root of d_c modulo 4N (Heegner hypothesis fails)");
}

// One level-N-adapted representative per ideal class: forms (N a0, beta +
// 2Nt, *) swept by increasing a0, so each class keeps its largest-Im tau.
// Labels are translated so the a0 = 1 form represents the principal class;
// the translation is a fixed class and keeps the torsor structure intact.
inline std::vector<HeegnerTau> heegner_taus(const PicGroup& pic, const Int& N) {
  Int d = pic.d_c;
  Int beta = heegner_beta(d, N);
  ClassForm base{N, beta, (beta * beta - d) / (4 * N)};
  if (!base.is_primitive())
    throw ValidationError("heegner_taus: level form is imprimitive (gcd(c,N) != 1?)");
  ClassForm base_red = reduce_form(base);
  ClassForm base_inv = reduce_form({base_red.a, -base_red.b, base_red.c});

  std::vector<HeegnerTau> out(pic.h());
  std::vector<bool> seen(pic.h(), false);
  std::size_t found = 0;
  for (Int a0 = 1; found < pic.h(); ++a0) {
    if (a0 > 8 * N * (-d))
      throw InternalError("heegner_taus: class sweep did not terminate");
    Int A = N * a0;
    for (Int t = 0; t < a0; ++t) {
      Int B = beta + 2 * N * t;
      if ((B * B - d) % (4 * A) != 0) continue;
      ClassForm f{A, B, (B * B - d) / (4 * A)};
      if (!f.is_primitive()) continue;
      int idx = pic.index_of(compose_forms(f, base_inv));
      if (seen[idx]) continue;
      seen[idx] = true;
      out[idx] = HeegnerTau{f, idx};
      ++found;
    }
  }
  return out;
}

// Composition-by-class permutation: class g sends the point of class i to
// the point of class g*i.
inline std::vector<int> galois_permutation(const PicGroup& pic, int g) {
  std::vector<int> perm(pic.h());
  for (std::size_t i = 0; i < pic.h(); ++i)
    perm[i] = pic.compose(g, static_cast<int>(i));
  return perm;
}

struct KolyvaginPrime {
  long ell;
  std::int64_t a_ell;
  int M_ell;
};

// Kolyvagin primes for (E, p, D): ell inert in K, p | a_ell, p | ell + 1,
// ell coprime to N D p; M(ell) = ord_p(gcd(a_ell, ell + 1)).
inline std::vector<KolyvaginPrime> kolyvagin_primes(const CurveData& E, long D,
                                                    long p, long bound) {
  if (E.conductor % Int(p) == 0 || Int(D) % Int(p) == 0)
    throw ValidationError("p must not divide N*D");
  std::vector<KolyvaginPrime> out;
  for (long ell = 2; ell <= bound; ++ell) {
    bool prime = ell >= 2;
    for (long q = 2; q * q <= ell; ++q)
      if (ell % q == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    if (E.conductor % Int(ell) == 0 || D % ell == 0 || ell == p) continue;
    if (kronecker_symbol(-Int(D), Int(ell)) != -1) continue;  // must be inert
    std::int64_t al = ap_count(E, Int(ell));
    Int g = gcd(Int(al), Int(ell + 1));
    int M = 0;
    while (g % p == 0) {
      g /= p;
      ++M;
    }
    if (M == 0) continue;
    out.push_back({ell, al, M});
  }
  return out;
}

constexpr int kMInfinity = std::numeric_limits<int>::max();

// M(c) = min over ell | c of M(ell); +infinity sentinel for c = 1.
inline int M_of_c(long c, const std::vector<KolyvaginPrime>& primes) {
  if (c < 1) throw ValidationError("c must be positive");
  int m = kMInfinity;
  long rest = c;
  for (const auto& kp : primes) {
    if (rest % kp.ell == 0) {
      m = std::min(m, kp.M_ell);
      while (rest % kp.ell == 0) rest /= kp.ell;
    }
  }
  if (rest != 1)
    throw ValidationError("M_of_c: c has a factor outside the supplied list");
  return m;
}

}  // namespace heegner

#endif  // HEEGNER_HEEGNERSETS_HPP
