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

#ifndef HEEGNER_CURVE_HPP
#define HEEGNER_CURVE_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "heegner/bigfloat.hpp"
#include "heegner/fq.hpp"
#include "heegner/util.hpp"

namespace heegner {

// Arithmetic identity of an elliptic curve over Q, as ingested from the
// curve database. `sign` is the sign of the functional equation of L(E, s).
struct CurveData {
  std::string label;
  Rat a1, a2, a3, a4, a6;
  Int conductor;
  int sign = 0;
  Int modular_degree = 0;  // 0 = not ingested
  int torsion_order = 1;

  Rat b2() const { return a1 * a1 + 4 * a2; }
  Rat b4() const { return 2 * a4 + a1 * a3; }
  Rat b6() const { return a3 * a3 + 4 * a6; }
  Rat b8() const {
    return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  Rat c4() const { return b2() * b2() - 24 * b4(); }
  Rat c6() const {
    return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6();
  }
  Rat discriminant() const {
    Rat b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
    return -b2v * b2v * b8v - 8 * b4v * b4v * b4v - 27 * b6v * b6v +
           9 * b2v * b4v * b6v;
  }
  Rat j_invariant() const { return c4() * c4() * c4() / discriminant(); }
};

// y^2 = x^3 + Ax + B together with the change of variables back to the
// source model: x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct ShortWeierstrass {
  Rat A, B;
  Rat u, r, s, t;
};

inline ShortWeierstrass to_short_weierstrass(const CurveData& E) {
  if (E.discriminant() == 0) throw ValidationError("singular curve");
  ShortWeierstrass w;
  w.A = -E.c4() / 48;
  w.B = -E.c6() / 864;
  w.u = 1;
  w.r = -E.b2() / 12;
  w.s = -E.a1 / 2;
  w.t = E.a1 * E.b2() / 24 - E.a3 / 2;
  return w;
}

// Integral scaling variant y^2 = x^3 - 27*c4*x - 54*c6 (u = 1/6).
inline ShortWeierstrass to_short_weierstrass_integral(const CurveData& E) {
  if (E.discriminant() == 0) throw ValidationError("singular curve");
  ShortWeierstrass w;
  w.A = -27 * E.c4();
  w.B = -54 * E.c6();
  w.u = Rat(1, 6);
  w.r = -E.b2() / 12;
  w.s = -E.a1 / 2;
  w.t = E.a1 * E.b2() / 24 - E.a3 / 2;
  return w;
}

// a_p at a bad prime of a minimal model: 0 when additive, else +-1 with the
// split/non-split test on -c6 being a square in Q_p.
inline int bad_prime_ap(const CurveData& E, const Int& p) {
  Rat c4 = E.c4(), c6 = E.c6();
  Int c4z = numerator(c4), c6z = numerator(c6);
  if (denominator(c4) != 1 || denominator(c6) != 1)
    throw ValidationError("bad_prime_ap requires an integral model");
  if (c4z % p == 0) return 0;  // additive
  Int mc6 = -c6z;
  if (p == 2) {
    Int m = mc6 % 8;
    if (m < 0) m += 8;
    return m == 1 ? 1 : -1;
  }
  Int m = mc6 % p;
  if (m < 0) m += p;
  return kronecker_symbol(m, p) == 1 ? 1 : -1;
}

// Line format: label N [a1,a2,a3,a4,a6] sign modular_degree torsion_order
inline CurveData parse_curve_line(const std::string& line) {
  std::istringstream in(line);
  CurveData E;
  std::string avec;
  std::string n_str, sign_str, deg_str, tors_str;
  if (!(in >> E.label >> n_str >> avec >> sign_str >> deg_str >> tors_str))
    throw ValidationError("malformed curve record: " + line);
  E.conductor = Int(n_str);
  if (avec.front() != '[' || avec.back() != ']')
    throw ValidationError("malformed a-invariants: " + avec);
  std::string body = avec.substr(1, avec.size() - 2);
  std::vector<Rat> a;
  std::string tok;
  std::istringstream abody(body);
  while (std::getline(abody, tok, ',')) a.emplace_back(Int(tok));
  if (a.size() != 5) throw ValidationError("expected 5 a-invariants");
  E.a1 = a[0];
  E.a2 = a[1];
  E.a3 = a[2];
  E.a4 = a[3];
  E.a6 = a[4];
  E.sign = std::stoi(sign_str);
  E.modular_degree = Int(deg_str);
  E.torsion_order = std::stoi(tors_str);
  if (E.discriminant() == 0) throw ValidationError("singular curve record");
  return E;
}

class CurveDatabase {
 public:
  explicit CurveDatabase(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open curve database: " + path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      curves_.push_back(parse_curve_line(line));
    }
  }

  const CurveData& lookup(const std::string& label) const {
    for (const auto& E : curves_)
      if (E.label == label) return E;
    throw ValidationError("curve not in database: " + label);
  }

  const std::vector<CurveData>& all() const { return curves_; }

 private:
  std::vector<CurveData> curves_;
};

}  // namespace heegner

#endif  // HEEGNER_CURVE_HPP
