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

#ifndef HEEGNER_MODPARAM_HPP
#define HEEGNER_MODPARAM_HPP

#include <cstdint>
#include <vector>

#include "heegner/bigfloat.hpp"
#include "heegner/util.hpp"

namespace heegner {

// Value of the modular parametrization sum_{n>=1} (a_n/n) e^{2 pi i n tau}
// as a representative mod the period lattice, with a certified tail bound.
struct ModularImage {
  BigComplex z;
  std::size_t terms_used = 0;
  BigFloat tail_bound;
};

// Terms needed so that sqrt(3) * sum_{n>M} e^{-2 pi n y} < 2^(-prec_bits),
// using |a_n| <= d(n) sqrt(n) <= sqrt(3) n.
inline std::size_t phi_tau_terms(const BigFloat& im_tau, unsigned prec_bits) {
  if (!(im_tau > 0)) throw ValidationError("phi_tau: Im(tau) must be positive");
  BigFloat twopiy = 2 * pi_value() * im_tau;
  BigFloat log_tail_target = -BigFloat(prec_bits) * log(BigFloat(2));
  // log of sqrt(3)/(1 - e^{-2 pi y})
  BigFloat c = log(sqrt(BigFloat(3)) / (1 - exp(-twopiy)));
  BigFloat m = (c - log_tail_target) / twopiy;
  Int mi = floor_int(m) + 1;
  if (mi < 1) mi = 1;
  return mi.convert_to<std::size_t>();
}

inline ModularImage phi_tau(const std::vector<std::int64_t>& a,
                            const BigComplex& tau, unsigned prec_bits) {
  if (!(tau.im > 0)) throw ValidationError("phi_tau: Im(tau) must be positive");
  std::size_t need = phi_tau_terms(tau.im, prec_bits);
  if (a.size() < need + 1) {
    throw ValidationError("phi_tau: need coefficients a_1..a_" +
                          std::to_string(need) + " but only " +
                          std::to_string(a.empty() ? 0 : a.size() - 1) +
                          " supplied");
  }
  BigFloat two_pi = 2 * pi_value();
  // u = e^{2 pi i tau}
  BigComplex u = exp(BigComplex(-two_pi * tau.im, two_pi * tau.re));
  BigComplex un = u;
  BigComplex sum(BigFloat(0), BigFloat(0));
  for (std::size_t n = 1; n <= need; ++n) {
    if (a[n] != 0) sum += (BigFloat(a[n]) / BigFloat(static_cast<long>(n))) * un;
    un = un * u;
  }
  ModularImage img;
  img.z = sum;
  img.terms_used = need;
  BigFloat t = exp(-two_pi * tau.im);
  img.tail_bound = sqrt(BigFloat(3)) *
                   exp(-two_pi * tau.im * BigFloat(static_cast<long>(need + 1))) /
                   (1 - t);
  return img;
}

}  // namespace heegner

#endif  // HEEGNER_MODPARAM_HPP
