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

#ifndef HEEGNER_QUADFORM_HPP
#define HEEGNER_QUADFORM_HPP

#include <algorithm>
#include <vector>

#include "heegner/bigfloat.hpp"
#include "heegner/lattice.hpp"
#include "heegner/util.hpp"

namespace heegner {

// Primitive positive definite binary quadratic form a x^2 + b xy + c y^2.
struct ClassForm {
  Int a, b, c;

  Int disc() const { return b * b - 4 * a * c; }
  friend bool operator==(const ClassForm& f, const ClassForm& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c;
  }
  friend bool operator<(const ClassForm& f, const ClassForm& g) {
    if (f.a != g.a) return f.a < g.a;
    if (f.b != g.b) return f.b < g.b;
    return f.c < g.c;
  }
  bool is_primitive() const { return gcd(gcd(a, b), c) == 1; }
  bool is_reduced() const {
    if (!(abs(b) <= a && a <= c)) return false;
    if ((abs(b) == a || a == c) && b < 0) return false;
    return true;
  }
};

inline ClassForm reduce_form(ClassForm f) {
  if (f.a <= 0 || f.disc() >= 0)
    throw ValidationError("reduce_form: needs a positive definite form");
  for (;;) {
    // normalize b into (-a, a]
    Int two_a = 2 * f.a;
    Int r = f.b % two_a;
    if (r < 0) r += two_a;
    if (r > f.a) r -= two_a;
    f.c = f.c + (r * r - f.b * f.b) / (4 * f.a);
    f.b = r;
    if (f.a > f.c) {
      f = {f.c, -f.b, f.a};
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    if (f.b == -f.a) f.b = f.a;
    return f;
  }
}

namespace detail {

// Ideal of the order of discriminant d with Z-basis (u1 + v1 w, u2 + v2 w),
// w = (d + sqrt(d))/2, so w^2 = d w - (d^2 - d)/4.
struct OrderIdeal {
  Int d;
  // rows (coeff of w, coeff of 1)
  std::vector<std::vector<Int>> gens;
};

inline OrderIdeal ideal_of_form(const ClassForm& f, const Int& d) {
  // a Z + (-b + sqrt(d))/2 Z ; (-b + sqrt(d))/2 = w - (b + d)/2
  OrderIdeal I;
  I.d = d;
  I.gens = {{Int(0), f.a}, {Int(1), -(f.b + d) / 2}};
  return I;
}

inline ClassForm form_of_ideal(const OrderIdeal& I) {
  std::vector<std::vector<Int>> h = hermite_normal_form(I.gens);
  if (h.size() != 2) throw InternalError("ideal module is not full rank");
  // h = [[l, k], [0, m]]: ideal = l*( (k/l + w) Z + (m/l) Z )
  Int l = h[0][0], k = h[0][1], m = h[1][0] == 0 ? h[1][1] : Int(0);
  if (m == 0 || l == 0 || m % l != 0 || k % l != 0)
    throw InternalError("unexpected ideal basis shape");
  Int a = m / l;
  Int b = -(2 * (k / l) + I.d);
  // normalize b mod 2a and complete the form
  Int c_num = b * b - I.d;
  if (c_num % (4 * a) != 0) throw InternalError("non-integral form from ideal");
  ClassForm f{a, b, c_num / (4 * a)};
  return reduce_form(f);
}

inline OrderIdeal ideal_mul(const OrderIdeal& I, const OrderIdeal& J) {
  // products of generators, reduced via w^2 = d w - (d^2 - d)/4
  Int w2_w = I.d;
  Int w2_1 = -(I.d * I.d - I.d) / 4;
  OrderIdeal P;
  P.d = I.d;
  for (const auto& g1 : I.gens)
    for (const auto& g2 : J.gens) {
      Int v1 = g1[0], u1 = g1[1], v2 = g2[0], u2 = g2[1];
      // (u1 + v1 w)(u2 + v2 w) = u1 u2 + (u1 v2 + u2 v1) w + v1 v2 w^2
      Int vv = v1 * v2;
      Int wcoef = u1 * v2 + u2 * v1 + vv * w2_w;
      Int ucoef = u1 * u2 + vv * w2_1;
      P.gens.push_back({wcoef, ucoef});
    }
  return P;
}

}  // namespace detail

// Gauss composition (through ideal multiplication), with reduction.
inline ClassForm compose_forms(const ClassForm& f, const ClassForm& g) {
  if (f.disc() != g.disc())
    throw ValidationError("composition of forms of different discriminants");
  Int d = f.disc();
  auto I = detail::ideal_of_form(f, d);
  auto J = detail::ideal_of_form(g, d);
  return detail::form_of_ideal(detail::ideal_mul(I, J));
}

// Pic(O) of the order of discriminant d_c < 0 as reduced forms with a
// composition table.
struct PicGroup {
  Int d_c;
  std::vector<ClassForm> forms;              // sorted; forms[identity_index] principal
  std::vector<std::vector<int>> table;       // composition indices
  std::size_t identity_index = 0;
  int generator_index = -1;                  // -1 when the group is not cyclic

  std::size_t h() const { return forms.size(); }

  int index_of(const ClassForm& reduced) const {
    auto it = std::lower_bound(forms.begin(), forms.end(), reduced);
    if (it == forms.end() || !(*it == reduced))
      throw InternalError("form not in class group");
    return static_cast<int>(it - forms.begin());
  }

  int compose(int i, int j) const { return table[i][j]; }

  int inverse(int i) const {
    ClassForm f = forms[i];
    return index_of(reduce_form({f.a, -f.b, f.c}));
  }

  int order_of(int i) const {
    int k = static_cast<int>(identity_index), n = 0;
    do {
      k = table[k][i];
      ++n;
    } while (k != static_cast<int>(identity_index));
    return n;
  }

  std::vector<int> power_list(int g) const {
    // identity, g, g^2, ... in order
    std::vector<int> p{static_cast<int>(identity_index)};
    int k = table[identity_index][g];
    while (k != static_cast<int>(identity_index)) {
      p.push_back(k);
      k = table[k][g];
    }
    return p;
  }
};

// All reduced primitive forms of discriminant d_c, with the composition
// table. Enumeration sweeps |b| <= a <= sqrt(|d_c|/3).
inline PicGroup reduced_forms(const Int& d_c) {
  if (d_c >= 0) throw ValidationError("discriminant must be negative");
  Int mod4 = ((d_c % 4) + 4) % 4;
  if (mod4 != 0 && mod4 != 1)
    throw ValidationError("discriminant must be 0 or 1 mod 4");

  PicGroup G;
  G.d_c = d_c;
  Int absd = -d_c;
  for (Int b = mod4 == 0 ? 0 : 1; 3 * b * b <= absd; b += 2) {
    Int four_ac = b * b + absd;
    for (Int a = b == 0 ? 1 : b; 4 * a * a <= four_ac; a = a + 1) {
      if (a == 0) continue;
      if (four_ac % (4 * a) != 0) continue;
      Int c = four_ac / (4 * a);
      ClassForm f{a, b, c};
      if (!f.is_primitive()) continue;
      G.forms.push_back(f);
      if (b != 0 && b != a && a != c) G.forms.push_back({a, -b, c});
    }
  }
  std::sort(G.forms.begin(), G.forms.end());

  ClassForm principal =
      reduce_form({Int(1), mod4 == 0 ? Int(0) : Int(1), (mod4 == 0 ? absd : (1 + absd)) / 4});
  G.identity_index = G.index_of(principal);

  std::size_t h = G.forms.size();
  G.table.assign(h, std::vector<int>(h, 0));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j) {
      int k = G.index_of(compose_forms(G.forms[i], G.forms[j]));
      G.table[i][j] = k;
      G.table[j][i] = k;
    }

  for (std::size_t i = 0; i < h; ++i)
    if (G.order_of(static_cast<int>(i)) == static_cast<int>(h)) {
      G.generator_index = static_cast<int>(i);
      break;
    }
  return G;
}

}  // namespace heegner

#endif  // HEEGNER_QUADFORM_HPP
