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

#include "realcyclo/basis.h"

#include <span>
#include <utility>

#include "realcyclo/errors.h"

namespace realcyclo {

namespace {

u64 RootFor(const Modulus& modulus, u64 order) { return FindRootOfUnity(modulus, order).zeta; }

void CheckCanonical(const std::vector<u64>& coeffs, u64 q) {
  for (u64 c : coeffs) {
    if (c >= q) throw DomainError("coefficient is not a canonical residue");
  }
}

}  // namespace

BasisPlan::BasisPlan(const RingParams& params, const Modulus& modulus)
    : params_(params),
      zq_(modulus),
      zeta_(RootFor(modulus, 4 * params.dimension)),
      ntt_(zq_, 4 * params.dimension, zeta_),
      node_plan_(zq_, params.dimension, zeta_) {
  const std::size_t m = params_.dimension;
  fact_.resize(2 * m + 1);
  inv_fact_.resize(2 * m + 1);
  fact_[0] = zq_.One();
  for (std::size_t i = 1; i <= 2 * m; ++i) fact_[i] = zq_.Mul(fact_[i - 1], zq_.FromInt(static_cast<i64>(i)));
  inv_fact_[2 * m] = zq_.Inv(fact_[2 * m]);
  for (std::size_t i = 2 * m; i > 0; --i) inv_fact_[i - 1] = zq_.Mul(inv_fact_[i], zq_.FromInt(static_cast<i64>(i)));
  inv_four_pow_ = zq_.Inv(zq_.Pow(zq_.FromInt(4), m - 1));
}

std::vector<u64> BasisPlan::TaylorShift(const std::vector<u64>& k, u64 shift, std::size_t degree,
                                        OpCounter* ops) const {
  if (k.size() > degree + 1 || 2 * degree + 1 > ntt_.size()) {
    throw DomainError("Taylor shift degree exceeds plan");
  }
  // b_j j! = sum_i (k_i i!) shift^{i-j} / (i-j)!, a correlation computed as a
  // convolution against the reversed input.
  std::vector<u64> rev(degree + 1, 0), pw(degree + 1, 0);
  u64 s = zq_.One();
  for (std::size_t t = 0; t <= degree; ++t) {
    const std::size_t i = degree - t;
    if (i < k.size()) rev[t] = zq_.Mul(k[i], fact_[i]);
    pw[t] = zq_.Mul(s, inv_fact_[t]);
    s = zq_.Mul(s, shift);
  }
  CountOps(ops, 3 * (degree + 1), 0);
  const std::vector<u64> conv = CyclicConvolve(ntt_, std::span<const u64>(rev), std::span<const u64>(pw), ops);
  std::vector<u64> out(degree + 1);
  for (std::size_t j = 0; j <= degree; ++j) out[j] = zq_.Mul(conv[degree - j], inv_fact_[j]);
  CountOps(ops, degree + 1, 0);
  return out;
}

std::vector<u64> BasisPlan::MoebiusCompose(const std::vector<u64>& k, u64 a, u64 b, u64 c, u64 d,
                                           std::size_t degree, OpCounter* ops) const {
  // (a u + b)/(c u + d) = alpha + beta / (c u + d).
  const u64 c_inv = zq_.Inv(c);
  const u64 alpha = zq_.Mul(a, c_inv);
  const u64 beta = zq_.Sub(b, zq_.Mul(alpha, d));
  const std::vector<u64> k1 = TaylorShift(k, alpha, degree, ops);
  std::vector<u64> r(degree + 1);
  u64 bp = zq_.One();
  for (std::size_t i = 0; i <= degree; ++i) {
    r[degree - i] = zq_.Mul(k1[i], bp);
    bp = zq_.Mul(bp, beta);
  }
  std::vector<u64> out = TaylorShift(r, d, degree, ops);
  u64 cp = zq_.One();
  for (std::size_t i = 0; i <= degree; ++i) {
    out[i] = zq_.Mul(out[i], cp);
    cp = zq_.Mul(cp, c);
  }
  CountOps(ops, 4 * (degree + 1), 0);
  return out;
}

std::vector<u64> BasisPlan::LaurentImage(const ModPowerPoly& f, OpCounter* ops) const {
  const std::size_t m = params_.dimension;
  const std::size_t d1 = m - 1;
  const std::vector<u64> fp = PaddedCoeffs(f.coeffs, m);
  CheckCanonical(fp, zq_.q());
  const std::vector<u64> h = MoebiusCompose(fp, 2, 2, zq_.FromInt(-1), 1, d1, ops);
  std::vector<u64> k(2 * d1 + 1, 0);
  for (std::size_t i = 0; i <= d1; ++i) k[2 * i] = h[i];
  std::vector<u64> g = MoebiusCompose(k, 1, zq_.FromInt(-1), 1, 1, 2 * d1, ops);
  for (auto& v : g) v = zq_.Mul(v, inv_four_pow_);
  CountOps(ops, g.size(), 0);
  return g;
}

ModChebPoly PowerToChebFast(const ModPowerPoly& f, const BasisPlan& plan, OpCounter* ops) {
  const std::size_t m = plan.dimension();
  const std::vector<u64> g = plan.LaurentImage(f, ops);
  std::vector<u64> c(m);
  for (std::size_t d = 0; d < m; ++d) c[d] = g[m - 1 + d];
  return ModChebPoly(std::move(c));
}

ModPowerPoly ChebToPowerFast(const ModChebPoly& c, const BasisPlan& plan, OpCounter* ops) {
  const Zq& zq = plan.zq();
  const std::size_t m = plan.dimension();
  const std::size_t d1 = m - 1;
  const std::vector<u64> cp = PaddedCoeffs(c.coeffs, m);
  CheckCanonical(cp, zq.q());
  std::vector<u64> g(2 * d1 + 1, 0);
  g[d1] = cp[0];
  for (std::size_t d = 1; d < m; ++d) g[d1 + d] = g[d1 - d] = cp[d];
  const std::vector<u64> k = plan.MoebiusCompose(g, 1, 1, zq.FromInt(-1), 1, 2 * d1, ops);
  std::vector<u64> h(d1 + 1);
  for (std::size_t i = 0; i <= d1; ++i) h[i] = k[2 * i];
  std::vector<u64> f = plan.MoebiusCompose(h, 1, zq.FromInt(-2), 1, 2, d1, ops);
  const u64 scale = zq.Inv(zq.Pow(zq.FromInt(4), d1));
  for (auto& v : f) v = zq.Mul(v, scale);
  CountOps(ops, f.size(), 0);
  return ModPowerPoly(std::move(f));
}

std::vector<u64> EvaluateOnNodes(const ModPowerPoly& f, const BasisPlan& plan, OpCounter* ops) {
  const Zq& zq = plan.zq();
  const std::size_t m = plan.dimension();
  std::vector<u64> g = plan.LaurentImage(f, ops);
  g.resize(4 * m, 0);
  std::vector<u64> spectrum(4 * m);
  plan.ntt().Forward(g, spectrum, ops);
  std::vector<u64> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t e = 2 * j + 1;
    // zeta^{-e(m-1)} with zeta of order 4m.
    const std::size_t neg = (4 * m - (e * (m - 1)) % (4 * m)) % (4 * m);
    out[j] = zq.Mul(spectrum[e], plan.ntt().RootPower(neg));
  }
  CountOps(ops, m, 0);
  return out;
}

}  // namespace realcyclo
