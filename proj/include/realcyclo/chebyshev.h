// Copyright 2026 The realcyclo Authors.
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
// Modified Chebyshev polynomials V_i(x) = 2 T_i(x/2) (with V_0 = 1), the
// minimal polynomials Psi_n of 2cos(2 pi / n), and cyclotomic polynomials.

#ifndef REALCYCLO_CHEBYSHEV_H_
#define REALCYCLO_CHEBYSHEV_H_

#include <gmpxx.h>

#include <vector>

#include "realcyclo/domain.h"
#include "realcyclo/modarith.h"
#include "realcyclo/poly.h"
#include "realcyclo/ring_params.h"

namespace realcyclo {

using IntPowerPoly = PowerPoly<mpz_class>;
using IntChebPoly = ChebPoly<mpz_class>;

// V_i in the power basis: V_0 = 1, V_1 = x, V_2 = x^2 - 2,
// V_i = x V_{i-1} - V_{i-2}.
IntPowerPoly VPoly(int i);

// Psi_n for n = 2^r 3^s: V_m, or V_m - 1 when s >= 1.
IntPowerPoly PsiPoly(const RingParams& params);

// n-th cyclotomic polynomial, from the Moebius product of (x^{n/d} - 1)^mu(d).
IntPowerPoly CyclotomicPoly(u64 n);

// Psi_n in the V-basis obtained by folding the palindromic Phi_n:
// Phi_n(x) / x^m = b_m + sum_{k>=1} b_{m+k} (x^k + x^-k). Valid for any
// n >= 3; throws ParameterError when deg Phi_n is odd (n = 1, 2).
IntChebPoly PsiFromCyclotomic(u64 n);

// Integer coefficient embedded into a domain.
inline mpz_class FromInteger(const IntegerRing&, const mpz_class& v) { return v; }
inline double FromInteger(const RealField&, const mpz_class& v) { return v.get_d(); }
inline u64 FromInteger(const Zq& zq, const mpz_class& v) {
  return mpz_fdiv_ui(v.get_mpz_t(), zq.q());
}

template <class Domain, template <class> class Poly>
Poly<typename Domain::value_type> ReduceInto(const Domain& d, const Poly<mpz_class>& f) {
  std::vector<typename Domain::value_type> out;
  out.reserve(f.coeffs.size());
  for (const auto& c : f.coeffs) out.push_back(FromInteger(d, c));
  return Poly<typename Domain::value_type>(std::move(out));
}

// Horner evaluation in the power basis.
template <class Domain>
typename Domain::value_type EvalPoly(const Domain& d,
                                     const PowerPoly<typename Domain::value_type>& f,
                                     const typename Domain::value_type& x) {
  auto acc = d.Zero();
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    acc = d.Add(d.Mul(acc, x), *it);
  }
  return acc;
}

// Backward three-term recurrence in the V-basis; monomial coefficients are
// never formed. With b_k = c_k + x b_{k+1} - b_{k+2}, the sum is
// c_0 + x b_1 - 2 b_2: the recurrence continues to a virtual V_0 = 2, so the
// final step corrects for V_0 = 1.
template <class Domain>
typename Domain::value_type EvalPoly(const Domain& d,
                                     const ChebPoly<typename Domain::value_type>& f,
                                     const typename Domain::value_type& x) {
  const auto& c = f.coeffs;
  if (c.empty()) return d.Zero();
  auto b1 = d.Zero();  // b_{k+1}
  auto b2 = d.Zero();  // b_{k+2}
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    auto bk = d.Sub(d.Add(c[k], d.Mul(x, b1)), b2);
    b2 = std::move(b1);
    b1 = std::move(bk);
  }
  const auto two_b2 = d.Add(b2, b2);
  return d.Sub(d.Add(c[0], d.Mul(x, b1)), two_b2);
}

}  // namespace realcyclo

#endif  // REALCYCLO_CHEBYSHEV_H_
