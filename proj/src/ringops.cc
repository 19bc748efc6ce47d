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

#include "realcyclo/ringops.h"

#include <span>
#include <utility>

#include "realcyclo/chebyshev.h"

namespace realcyclo {

namespace {

void CheckOperand(const std::vector<u64>& coeffs, const RingContext& ctx) {
  if (coeffs.size() > ctx.params().dimension) throw DomainError("operand degree must be < m");
  for (u64 c : coeffs) {
    if (c >= ctx.zq().q()) throw DomainError("coefficient is not a canonical residue");
  }
}

}  // namespace

RingContext::RingContext(const RingParams& params, const Modulus& modulus)
    : params_(params),
      zq_(modulus),
      dct_(MakeModDctPlan(params.dct_length, modulus)),
      basis_(params, modulus),
      psi_(ReduceInto(zq_, PsiPoly(params))) {
  scale_ = zq_.Mul(zq_.FromInt(4), dct_.inv_length());
}

ModPowerPoly MulSchoolbook(const ModPowerPoly& f, const ModPowerPoly& g, const RingContext& ctx) {
  CheckOperand(f.coeffs, ctx);
  CheckOperand(g.coeffs, ctx);
  return PolyRemMonic(ctx.zq(), PolyMul(ctx.zq(), f, g), ctx.psi());
}

ModChebPoly ChebMulFast(const ModChebPoly& f, const ModChebPoly& g, const RingContext& ctx,
                        OpCounter* ops) {
  CheckOperand(f.coeffs, ctx);
  CheckOperand(g.coeffs, ctx);
  const Zq& zq = ctx.zq();
  const std::size_t n = ctx.params().dct_length;
  const std::vector<u64> fa = PaddedCoeffs(f.coeffs, n);
  const std::vector<u64> ga = PaddedCoeffs(g.coeffs, n);
  std::vector<u64> fh = ctx.dct().Dct(fa, ops);
  const std::vector<u64> gh = ctx.dct().Dct(ga, ops);
  for (std::size_t j = 0; j < n; ++j) fh[j] = zq.Mul(fh[j], gh[j]);
  std::vector<u64> c = ctx.dct().Idct(fh, ops);
  for (auto& v : c) v = zq.Mul(v, ctx.product_scale());
  CountOps(ops, 2 * n, 0);
  if (!ctx.params().has_unit_shift()) return ModChebPoly(std::move(c));
  // N = 2m here; the product has V-degree <= 2m - 2.
  if (c[2 * ctx.params().dimension - 1] != 0) {
    throw DomainError("transform product has a nonzero top coefficient");
  }
  c.pop_back();
  CountOps(ops, 0, 2 * ctx.params().dimension);
  return ReduceModPsi(zq, ModChebPoly(std::move(c)), ctx.params());
}

ModPowerPoly MulPowerFast(const ModPowerPoly& f, const ModPowerPoly& g, const RingContext& ctx,
                          OpCounter* ops) {
  const ModChebPoly fc = PowerToChebFast(f, ctx.basis(), ops);
  const ModChebPoly gc = PowerToChebFast(g, ctx.basis(), ops);
  return ChebToPowerFast(ChebMulFast(fc, gc, ctx, ops), ctx.basis(), ops);
}

}  // namespace realcyclo
