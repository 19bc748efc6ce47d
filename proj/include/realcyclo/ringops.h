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
// Multiplication in Z_q[x]/(Psi_n).

#ifndef REALCYCLO_RINGOPS_H_
#define REALCYCLO_RINGOPS_H_

#include <cstdlib>
#include <vector>

#include "realcyclo/basis.h"
#include "realcyclo/errors.h"
#include "realcyclo/modarith.h"
#include "realcyclo/op_counter.h"
#include "realcyclo/poly.h"
#include "realcyclo/ring_params.h"
#include "realcyclo/transform.h"

namespace realcyclo {

// Plans and constants for one (ring, modulus) pair. Building one is the only
// step that allocates transform tables.
class RingContext {
 public:
  // Throws InadmissibleModulusError unless M | f - 1 for each factor f.
  RingContext(const RingParams& params, const Modulus& modulus);

  const RingParams& params() const { return params_; }
  const Zq& zq() const { return zq_; }
  const ModDctPlan& dct() const { return dct_; }
  const BasisPlan& basis() const { return basis_; }
  // Psi_n reduced mod q, power basis.
  const ModPowerPoly& psi() const { return psi_; }
  // 4 / N, the one scaling the product needs.
  u64 product_scale() const { return scale_; }

 private:
  RingParams params_;
  Zq zq_;
  ModDctPlan dct_;
  BasisPlan basis_;
  ModPowerPoly psi_;
  u64 scale_;
};

// f g mod Psi_n by schoolbook product and long division. O(m^2).
ModPowerPoly MulSchoolbook(const ModPowerPoly& f, const ModPowerPoly& g, const RingContext& ctx);

// Product of two V-expansions with V_i V_j = V_{i+j} + V_{|i-j|}
// (i, j >= 1); V_i^2 = V_{2i} + 2 V_0.
template <class Domain>
ChebPoly<typename Domain::value_type> ChebMulLinear(
    const Domain& d, const ChebPoly<typename Domain::value_type>& f,
    const ChebPoly<typename Domain::value_type>& g) {
  using T = typename Domain::value_type;
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<T> out(f.coeffs.size() + g.coeffs.size() - 1, d.Zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      const T p = d.Mul(f.coeffs[i], g.coeffs[j]);
      out[i + j] = d.Add(out[i + j], p);
      if (i == 0 || j == 0) continue;
      const std::size_t diff = i > j ? i - j : j - i;
      out[diff] = d.Add(out[diff], diff == 0 ? d.Add(p, p) : p);
    }
  }
  return ChebPoly<T>(std::move(out));
}

// Folds a V-expansion of degree <= 2m - 2 back below m. For s >= 1, V_m = 1
// and V_{m+i} = V_i - V_{m-i}; for s = 0, V_m = 0 and V_{m+i} = -V_{m-i}.
// Throws DomainError if the degree is 2m - 1 or more.
template <class Domain>
ChebPoly<typename Domain::value_type> ReduceModPsi(
    const Domain& d, const ChebPoly<typename Domain::value_type>& c, const RingParams& params) {
  using T = typename Domain::value_type;
  const std::size_t m = params.dimension;
  if (c.coeffs.size() > 2 * m - 1) throw DomainError("V-degree too large to reduce");
  std::vector<T> cc = PaddedCoeffs(c.coeffs, 2 * m);
  std::vector<T> out(cc.begin(), cc.begin() + static_cast<std::ptrdiff_t>(m));
  if (params.has_unit_shift()) out[0] = d.Add(out[0], cc[m]);
  for (std::size_t i = 1; i < m; ++i) {
    if (params.has_unit_shift()) out[i] = d.Add(out[i], cc[m + i]);
    out[i] = d.Sub(out[i], cc[2 * m - i]);
  }
  return ChebPoly<T>(std::move(out));
}

// f g mod Psi_n for V-expansions of degree < m: three length-N DCT-type
// transforms, a pointwise product and the fold. O(m log m).
ModChebPoly ChebMulFast(const ModChebPoly& f, const ModChebPoly& g, const RingContext& ctx,
                        OpCounter* ops = nullptr);

// Power-basis product routed through the V-basis: convert, ChebMulFast,
// convert back.
ModPowerPoly MulPowerFast(const ModPowerPoly& f, const ModPowerPoly& g, const RingContext& ctx,
                          OpCounter* ops = nullptr);

}  // namespace realcyclo

#endif  // REALCYCLO_RINGOPS_H_
