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

#include "realcyclo/conditioning.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "realcyclo/errors.h"
#include "realcyclo/transform.h"

namespace realcyclo {

namespace {

double Cos2Pi(u64 num, u64 den) {
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den));
}

void RequireUnitShift(const RingParams& params) {
  if (!params.has_unit_shift()) throw ParameterError("conditioning checks need s >= 1");
}

}  // namespace

EmbeddingMatrix BuildEmbedding(const RingParams& params, EmbeddingFlavor flavor) {
  return BuildEmbedding(params.conductor, flavor);
}

EmbeddingMatrix BuildEmbedding(u64 n, EmbeddingFlavor flavor) {
  if (n < 3) throw ParameterError("conductor must be >= 3");
  EmbeddingMatrix out;
  out.flavor = flavor;
  for (u64 sigma = 1; sigma <= n / 2; ++sigma) {
    if (std::gcd(sigma, n) == 1) out.sigmas.push_back(sigma);
  }
  const std::size_t m = out.sigmas.size();
  out.entries = Matrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double v = Cos2Pi(out.sigmas[i] * j, n);
      out.entries(i, j) = (flavor == EmbeddingFlavor::kM && j > 0) ? 2.0 * v : v;
    }
  }
  return out;
}

double FrobeniusCondition(const Matrix& a) {
  return std::sqrt(a.FrobeniusNormSquared() * Inverse(a).FrobeniusNormSquared());
}

double CosineNormSquared(std::size_t n) {
  const double d = static_cast<double>(n);
  return d + d * (d - 1) / 2;
}

double CosineInverseNormSquared(std::size_t n) {
  const double d = static_cast<double>(n);
  return (2 * d - 1) / d;
}

double CosineConditionSquared(std::size_t n) {
  const double d = static_cast<double>(n);
  return d * d + (d - 1) / 2;
}

EquivalenceReport VerifyEquivalenceBound(const RingParams& params) {
  RequireUnitShift(params);
  EquivalenceReport rep;
  rep.conductor = params.conductor;
  rep.m = params.dimension;
  const std::size_t nc = params.conductor / 4;
  rep.cosine_length = nc;
  const Matrix c = CosineMatrix(nc);
  rep.c_norm_sq = c.FrobeniusNormSquared();
  rep.c_inv_norm_sq = Inverse(c).FrobeniusNormSquared();
  rep.c_cond_sq = rep.c_norm_sq * rep.c_inv_norm_sq;
  rep.c_cond_sq_closed = CosineConditionSquared(nc);
  const Matrix v = BuildEmbedding(params, EmbeddingFlavor::kV).entries;
  rep.v_norm_sq = v.FrobeniusNormSquared();
  rep.v_inv_norm_sq = Inverse(v).FrobeniusNormSquared();
  rep.v_cond_sq = rep.v_norm_sq * rep.v_inv_norm_sq;
  const double n3 = std::pow(static_cast<double>(nc), 3);
  rep.v_cond_sq_over_n3 = rep.v_cond_sq / n3;
  rep.closed_form_ok =
      std::abs(rep.c_cond_sq - rep.c_cond_sq_closed) <= 1e-6 * rep.c_cond_sq_closed;
  rep.norm_ok = rep.v_norm_sq < rep.c_norm_sq;
  rep.inverse_norm_ok = rep.v_inv_norm_sq < 2.0 * static_cast<double>(nc) * rep.c_inv_norm_sq;
  rep.bound_ok = rep.v_cond_sq < 2.0 * static_cast<double>(nc) * rep.c_cond_sq;
  return rep;
}

std::vector<std::size_t> ConditioningRowOrder(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(),
                        [](std::size_t i) { return (2 * i + 1) % 3 != 0; });
  return order;
}

Matrix ColumnOpsR1(std::size_t m) {
  const std::size_t nc = 3 * m / 2;
  Matrix r = Matrix::Identity(nc);
  for (std::size_t jp = 1; jp < m / 2; ++jp) r(m - jp, m + jp) = 1.0;
  return r;
}

Matrix ColumnOpsR2(std::size_t m) {
  const std::size_t nc = 3 * m / 2;
  Matrix r = Matrix::Identity(nc);
  r(0, m) = -0.5;
  for (std::size_t jp = 1; jp < m / 2; ++jp) r(jp, m + jp) = -1.0;
  return r;
}

BlockReport BlockDecompositionCheck(const RingParams& params) {
  RequireUnitShift(params);
  BlockReport rep;
  const u64 n = params.conductor;
  const std::size_t m = params.dimension;
  const std::size_t nc = n / 4;
  const std::size_t h = m / 2;
  rep.conductor = n;
  rep.m = m;
  rep.cosine_length = nc;

  const std::vector<std::size_t> order = ConditioningRowOrder(nc);
  std::vector<std::size_t> sorted(order);
  std::sort(sorted.begin(), sorted.end());
  rep.permutation_ok = true;
  for (std::size_t i = 0; i < nc; ++i) rep.permutation_ok &= sorted[i] == i;
  for (std::size_t i = 0; i < m; ++i) rep.permutation_ok &= (2 * order[i] + 1) % 3 != 0;
  if (!rep.permutation_ok) rep.failures.push_back("P is not the required bijection");

  const Matrix c = CosineMatrix(nc);
  Matrix pc(nc, nc);
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t j = 0; j < nc; ++j) pc(i, j) = c(order[i], j);
  }
  const Matrix r1 = ColumnOpsR1(m);
  const Matrix r2 = ColumnOpsR2(m);
  const Matrix t = pc * r1 * r2;

  const Matrix v = BuildEmbedding(params, EmbeddingFlavor::kV).entries;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      rep.top_left_err = std::max(rep.top_left_err, std::abs(t(i, j) - v(i, j)));
    }
    for (std::size_t j = m; j < nc; ++j) rep.top_right_max = std::max(rep.top_right_max, std::abs(t(i, j)));
  }
  for (std::size_t k = 0; k < h; ++k) {
    const u64 sigma = 2 * order[m + k] + 1;
    for (std::size_t jp = 0; jp < h; ++jp) {
      const double expect = jp == 0 ? -1.5 : -3.0 * Cos2Pi(sigma * jp, n);
      rep.c2_err = std::max(rep.c2_err, std::abs(t(m + k, m + jp) - expect));
    }
  }

  const Matrix r = r1 * r2;
  Matrix r_inv = Matrix::Identity(nc);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = m; j < nc; ++j) {
      r_inv(i, j) = -r(i, j);
      rep.f_norm_sq += r(i, j) * r(i, j);
    }
  }
  const Matrix prod = r * r_inv;
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      rep.r_inverse_err = std::max(rep.r_inverse_err, std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)));
    }
  }

  if (rep.top_left_err > 1e-12) rep.failures.push_back("top-left block differs from V");
  if (rep.top_right_max > 1e-10) rep.failures.push_back("top-right block is not zero");
  if (rep.c2_err > 1e-10) rep.failures.push_back("C'' differs from its closed form");
  if (rep.r_inverse_err != 0.0) rep.failures.push_back("R^{-1} is not [[I,-F],[0,I]]");
  if (!(rep.f_norm_sq < static_cast<double>(nc))) rep.failures.push_back("||F||_F^2 >= N");
  return rep;
}

}  // namespace realcyclo
