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

#ifndef HEEGNER_LATTICE_HPP
#define HEEGNER_LATTICE_HPP

#include <optional>
#include <vector>

#include "heegner/bigfloat.hpp"
#include "heegner/poly.hpp"
#include "heegner/util.hpp"

namespace heegner {

// Row-basis integer lattice.
struct IntLattice {
  std::vector<std::vector<Int>> basis;

  std::size_t rows() const { return basis.size(); }
  std::size_t cols() const { return basis.empty() ? 0 : basis[0].size(); }
};

namespace detail {

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Nearest integer to a/b, ties toward even of the floor pair.
inline Int round_div(const Int& a, const Int& b) {
  Int q, r;
  divide_qr(a, b, q, r);
  Int twice = 2 * r;
  if (twice > abs(b) || (twice == abs(b) && b > 0)) q += (b > 0 ? 1 : -1);
  if (-twice > abs(b)) q -= (b > 0 ? 1 : -1);
  return q;
}

}  // namespace detail

// Exact integral LLL on the rows of `lat` (all-integer variant with the
// Gram determinants d_i and scaled coefficients lambda_{i,j}). delta is
// given as a rational in (1/4, 1).
inline IntLattice lll_reduce(const IntLattice& lat, const Rat& delta = Rat(99, 100)) {
  if (delta <= Rat(1, 4) || delta >= 1) throw ValidationError("lll: delta out of (1/4,1)");
  const std::size_t n = lat.rows();
  std::vector<std::vector<Int>> b = lat.basis;
  if (n == 0) return {b};
  std::vector<Int> d(n + 1);
  d[0] = 1;
  std::vector<std::vector<Int>> lam(n, std::vector<Int>(n, Int(0)));

  // initial Gram-Schmidt data
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Int u = detail::dot(b[i], b[j]);
      for (std::size_t k = 0; k < j; ++k)
        u = (d[k + 1] * u - lam[i][k] * lam[j][k]) / d[k];
      if (j < i)
        lam[i][j] = u;
      else {
        d[i + 1] = u;
        if (d[i + 1] == 0) throw ValidationError("lll: dependent rows");
      }
    }
  }

  const Int dn = numerator(delta), dd = denominator(delta);
  auto redi = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam[k][l]) > d[l + 1]) {
      Int q = detail::round_div(lam[k][l], d[l + 1]);
      for (std::size_t i = 0; i < b[k].size(); ++i) b[k][i] -= q * b[l][i];
      lam[k][l] -= q * d[l + 1];
      for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }
  };

  std::size_t k = 1;
  while (k < n) {
    redi(k, k - 1);
    Int lk = lam[k][k - 1];
    if (dd * (d[k + 1] * d[k - 1] + lk * lk) < dn * d[k] * d[k]) {
      // swap rows k and k-1
      std::swap(b[k], b[k - 1]);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      Int lambda = lam[k][k - 1];
      Int bnew = (d[k - 1] * d[k + 1] + lambda * lambda) / d[k];
      for (std::size_t i = k + 1; i < n; ++i) {
        Int t = lam[i][k];
        lam[i][k] = (d[k + 1] * lam[i][k - 1] - lambda * t) / d[k];
        lam[i][k - 1] = (bnew * t + lambda * lam[i][k]) / d[k + 1];
      }
      d[k] = bnew;
      k = k > 1 ? k - 1 : 1;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) redi(k, l);
      ++k;
    }
  }
  return {b};
}

// Row-style Hermite normal form (upper staircase, positive pivots, entries
// above a pivot reduced). Used as the exact lattice-equality oracle.
inline std::vector<std::vector<Int>> hermite_normal_form(std::vector<std::vector<Int>> m) {
  if (m.empty()) return m;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // eliminate below row r in column c via Euclid
    for (std::size_t i = r + 1; i < rows; ++i) {
      while (m[i][c] != 0) {
        if (m[r][c] == 0) {
          std::swap(m[r], m[i]);
          continue;
        }
        Int q = m[i][c] / m[r][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) std::swap(m[r], m[i]);
      }
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      Int q = m[i][c] / m[r][c];
      if (m[i][c] % m[r][c] < 0) q -= 1;  // floor division
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

// Integer relation search: find small integers (n_0,...,n_{m-1}), not all
// zero, with |sum n_i v_i| tiny. Returns the candidate from the shortest
// LLL vector; the caller decides acceptance.
inline std::vector<Int> linear_dependence(const std::vector<BigComplex>& values,
                                          unsigned precision_bits) {
  const std::size_t m = values.size();
  BigFloat scale = pow(BigFloat(2), static_cast<int>(precision_bits));
  IntLattice lat;
  lat.basis.assign(m, std::vector<Int>(m + 2, Int(0)));
  for (std::size_t i = 0; i < m; ++i) {
    lat.basis[i][i] = 1;
    lat.basis[i][m] = round_int(scale * values[i].re);
    lat.basis[i][m + 1] = round_int(scale * values[i].im);
  }
  IntLattice red = lll_reduce(lat);
  std::vector<Int> rel(red.basis[0].begin(), red.basis[0].begin() + m);
  return rel;
}

// Candidate integer minimal polynomial of degree <= degree for z, or
// nullopt when nothing passes the recognition threshold
// |p(z)| < 2^(-precision/4) * max|coefficient|. Candidates still require
// exact downstream verification.
inline std::optional<std::vector<Int>> algebraic_dependence(const BigComplex& z,
                                                            unsigned degree,
                                                            unsigned precision_bits) {
  if (degree < 1) throw ValidationError("algdep: degree must be >= 1");
  std::vector<BigComplex> powers(degree + 1);
  powers[0] = BigComplex(BigFloat(1), BigFloat(0));
  for (unsigned i = 1; i <= degree; ++i) powers[i] = powers[i - 1] * z;
  std::vector<Int> rel = linear_dependence(powers, precision_bits);

  Poly<Rat> p;
  Int maxc = 0;
  bool nonzero = false;
  for (const auto& c : rel) {
    p.emplace_back(c);
    maxc = std::max(maxc, Int(abs(c)));
    nonzero = nonzero || c != 0;
  }
  poly_trim(p);
  if (!nonzero || p.empty()) return std::nullopt;

  BigComplex val(BigFloat(0), BigFloat(0));
  for (std::size_t i = p.size(); i-- > 0;) val = val * z + BigComplex(BigFloat(numerator(p[i])), BigFloat(0));
  BigFloat threshold =
      pow(BigFloat(2), -static_cast<int>(precision_bits / 4)) * BigFloat(maxc);
  if (!(abs(val) < threshold)) return std::nullopt;

  std::vector<Int> prim = poly_primitive_z(p);
  return prim;
}

}  // namespace heegner

#endif  // HEEGNER_LATTICE_HPP
