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
// Change of basis between {1, x, ..., x^{m-1}} and {V_0, ..., V_{m-1}}.
//
// The references are exact O(m^2) triangular recursions over any domain.
// The fast modular converters rest on the substitution x = u + 1/u, under
// which V_d(x) = u^d + u^-d: the V-coefficients of f are read off the
// Laurent polynomial f(u + 1/u). Writing s = (u-1)/(u+1) and y = s^2,
//
//   x = 2(1+y)/(1-y),  u^{m-1} f(u + 1/u) = 4^{-(m-1)} (u+1)^{2(m-1)} H(s^2),
//   H(y) = (1-y)^{m-1} f(2(1+y)/(1-y)),
//
// so both directions are two Moebius compositions, each costing two Taylor
// shifts, i.e. a constant number of cyclic transforms of length 4m.

#ifndef REALCYCLO_BASIS_H_
#define REALCYCLO_BASIS_H_

#include <cstddef>
#include <vector>

#include "realcyclo/modarith.h"
#include "realcyclo/ntt.h"
#include "realcyclo/op_counter.h"
#include "realcyclo/poly.h"
#include "realcyclo/ring_params.h"
#include "realcyclo/transform.h"

namespace realcyclo {

using ModPowerPoly = PowerPoly<u64>;
using ModChebPoly = ChebPoly<u64>;

// x^k expanded in the V-basis by Horner's rule, using x V_0 = V_1,
// x V_1 = V_2 + 2 V_0 and x V_i = V_{i+1} + V_{i-1} for i >= 2.
template <class Domain>
ChebPoly<typename Domain::value_type> PowerToChebRef(
    const Domain& d, const PowerPoly<typename Domain::value_type>& f) {
  using T = typename Domain::value_type;
  std::vector<T> acc;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    std::vector<T> next(acc.size() + 1, d.Zero());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] = d.Add(next[i + 1], acc[i]);
      if (i == 1) {
        next[0] = d.Add(next[0], d.Add(acc[1], acc[1]));
      } else if (i >= 2) {
        next[i - 1] = d.Add(next[i - 1], acc[i]);
      }
    }
    next[0] = d.Add(next[0], *it);
    acc = std::move(next);
  }
  return ChebPoly<T>(std::move(acc));
}

// sum c_i V_i with the V_i generated by their three-term recursion.
template <class Domain>
PowerPoly<typename Domain::value_type> ChebToPowerRef(
    const Domain& d, const ChebPoly<typename Domain::value_type>& c) {
  using T = typename Domain::value_type;
  const std::size_t n = c.coeffs.size();
  std::vector<T> out(n, d.Zero());
  std::vector<T> prev, cur;  // V_{i-1}, V_i
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<T> v;
    if (i == 0) {
      v = {d.One()};
    } else if (i == 1) {
      v = {d.Zero(), d.One()};
    } else {
      v.assign(i + 1, d.Zero());
      for (std::size_t j = 0; j < cur.size(); ++j) v[j + 1] = cur[j];
      // V_2 = x V_1 - 2 V_0; afterwards V_i = x V_{i-1} - V_{i-2}.
      const T weight = (i == 2) ? d.FromInt(2) : d.One();
      for (std::size_t j = 0; j < prev.size(); ++j) v[j] = d.Sub(v[j], d.Mul(weight, prev[j]));
    }
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = d.Add(out[j], d.Mul(c.coeffs[i], v[j]));
    prev = std::move(cur);
    cur = std::move(v);
  }
  return PowerPoly<T>(std::move(out));
}

// Precomputed data for the fast converters of one ring and modulus: a root
// zeta of order 4m, the length-4m cyclic transform, and factorials up to 2m.
class BasisPlan {
 public:
  // Throws InadmissibleModulusError unless 4m | f - 1 for each factor f.
  BasisPlan(const RingParams& params, const Modulus& modulus);

  const RingParams& params() const { return params_; }
  const Zq& zq() const { return zq_; }
  std::size_t dimension() const { return params_.dimension; }
  // Length-m DCT sharing zeta; its nodes x_j are the roots of V_m.
  const ModDctPlan& node_plan() const { return node_plan_; }

  // (c u + d)^D K((a u + b)/(c u + d)) for deg K <= D, with c a unit.
  std::vector<u64> MoebiusCompose(const std::vector<u64>& k, u64 a, u64 b, u64 c, u64 d,
                                  std::size_t degree, OpCounter* ops) const;

  // K(t + shift), degree <= 2m - 2.
  std::vector<u64> TaylorShift(const std::vector<u64>& k, u64 shift, std::size_t degree,
                               OpCounter* ops) const;

  // Coefficients of u^{m-1} f(u + 1/u), degree 2m - 2.
  std::vector<u64> LaurentImage(const ModPowerPoly& f, OpCounter* ops) const;

  const NttPlan<Zq>& ntt() const { return ntt_; }

 private:
  RingParams params_;
  Zq zq_;
  u64 zeta_;
  NttPlan<Zq> ntt_;
  ModDctPlan node_plan_;
  std::vector<u64> fact_;
  std::vector<u64> inv_fact_;
  u64 inv_four_pow_;  // 4^{-(m-1)}
};

// O(m log m) power -> V-basis. Requires deg f < m and canonical residues.
ModChebPoly PowerToChebFast(const ModPowerPoly& f, const BasisPlan& plan,
                            OpCounter* ops = nullptr);

// O(m log m) V-basis -> power basis. Requires V-degree < m.
ModPowerPoly ChebToPowerFast(const ModChebPoly& c, const BasisPlan& plan,
                             OpCounter* ops = nullptr);

// f(x_j) for the m nodes x_j = zeta^{2j+1} + zeta^{-(2j+1)}, in O(m log m).
// Equals 2 * Dct(c) for the V-coefficients c of f.
std::vector<u64> EvaluateOnNodes(const ModPowerPoly& f, const BasisPlan& plan,
                                 OpCounter* ops = nullptr);

}  // namespace realcyclo

#endif  // REALCYCLO_BASIS_H_
