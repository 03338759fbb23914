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

#ifndef HEEGNER_BIGFLOAT_HPP
#define HEEGNER_BIGFLOAT_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace heegner {

// Exact integers and rationals (GMP backed).
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Variable-precision real. Arithmetic on mixed-precision operands yields
// the larger precision, so values never silently drop below the working
// precision they were produced at.
using BigFloat = boost::multiprecision::mpfr_float;

// Scoped working precision (decimal digits). New values constructed from
// literals or exact types pick this up; existing values keep their own.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10);
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline unsigned digits_for_bits(unsigned bits) {
  return static_cast<unsigned>(bits * 0.30103) + 2;
}
inline unsigned bits_for_digits(unsigned digits10) {
  return static_cast<unsigned>(digits10 * 3.3220) + 4;
}

inline BigFloat to_bigfloat(const Rat& q) { return BigFloat(q); }
inline BigFloat to_bigfloat(const Int& n) { return BigFloat(n); }

inline Int floor_int(const BigFloat& x) {
  BigFloat f = floor(x);
  return Int(f.convert_to<boost::multiprecision::mpz_int>());
}
inline Int round_int(const BigFloat& x) { return floor_int(x + BigFloat(0.5)); }

inline BigFloat pi_value() { return boost::math::constants::pi<BigFloat>(); }

// Complex number over BigFloat. Kept as a plain pair of reals with the
// handful of transcendental operations the analytic layer needs.
struct BigComplex {
  BigFloat re, im;

  BigComplex() : re(0), im(0) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(const BigFloat& r) : re(r), im(0) {}
  explicit BigComplex(long r) : re(r), im(0) {}

  BigComplex operator-() const { return {-re, -im}; }
  BigComplex conj() const { return {re, -im}; }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigFloat& a, const BigComplex& b) {
    return {a * b.re, a * b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& b) {
    return b * a;
  }
  friend BigComplex operator/(const BigComplex& a, const BigFloat& b) {
    return {a.re / b, a.im / b};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

  friend std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
    return os << "(" << z.re << (z.im < 0 ? " - " : " + ")
              << abs(z.im) << "*i)";
  }
};

inline BigFloat norm2(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigFloat abs(const BigComplex& z) { return sqrt(norm2(z)); }
inline BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

inline BigComplex sqrt(const BigComplex& z) {
  if (z.im == 0) {
    if (z.re >= 0) return BigComplex(sqrt(z.re), BigFloat(0));
    return BigComplex(BigFloat(0), sqrt(-z.re));
  }
  BigFloat m = abs(z);
  BigFloat u = sqrt((m + abs(z.re)) / 2);
  BigFloat v = z.im / (2 * u);
  if (z.re >= 0) return {u, v};
  // principal branch: real part >= 0
  if (z.im >= 0) return {v, u};
  return {-v, -u};
}

inline BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

inline BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

inline BigComplex pow_int(BigComplex base, long e) {
  BigComplex r(BigFloat(1), BigFloat(0));
  bool inv = e < 0;
  unsigned long k = inv ? -e : e;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  if (inv) r = BigComplex(BigFloat(1), BigFloat(0)) / r;
  return r;
}

// x^s for real x > 0 and complex s.
inline BigComplex pow_rc(const BigFloat& x, const BigComplex& s) {
  if (!(x > 0)) throw std::domain_error("pow_rc: base must be positive");
  BigFloat lx = log(x);
  return exp(BigComplex(s.re * lx, s.im * lx));
}

inline BigComplex root_of_unity(unsigned k, unsigned n) {
  BigFloat t = 2 * pi_value() * BigFloat(k % n) / BigFloat(n);
  return {cos(t), sin(t)};
}

// A value with a certified error radius. Only the few operations used by
// the tail-bound bookkeeping are provided; this is not ball arithmetic.
struct Ball {
  BigFloat center;
  BigFloat radius;

  Ball() : center(0), radius(0) {}
  explicit Ball(BigFloat c) : center(std::move(c)), radius(0) {}
  Ball(BigFloat c, BigFloat r) : center(std::move(c)), radius(std::move(r)) {}

  friend Ball operator+(const Ball& a, const Ball& b) {
    return {a.center + b.center, a.radius + b.radius};
  }
  friend Ball operator*(const Ball& a, const Ball& b) {
    BigFloat r = abs(a.center) * b.radius + abs(b.center) * a.radius +
                 a.radius * b.radius;
    return {a.center * b.center, r};
  }
};

}  // namespace heegner

#endif  // HEEGNER_BIGFLOAT_HPP
