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
// Embedding matrices of the maximal real subfield and the condition-number
// bounds relating them to the cosine matrix C_N, N = n/4.

#ifndef REALCYCLO_CONDITIONING_H_
#define REALCYCLO_CONDITIONING_H_

#include <cstddef>
#include <string>
#include <vector>

#include "realcyclo/dense_matrix.h"
#include "realcyclo/modarith.h"
#include "realcyclo/ring_params.h"

namespace realcyclo {

enum class EmbeddingFlavor { kV, kM };

struct EmbeddingMatrix {
  Matrix entries;             // m x m
  std::vector<u64> sigmas;    // row labels, ascending
  EmbeddingFlavor flavor = EmbeddingFlavor::kV;
};

// V_{sigma,j} = cos(2 pi sigma j / n); M = 2 V S_m^{-1}, i.e. M_{sigma,j} =
// V_j(2 cos(2 pi sigma / n)). sigma runs over 1..n/2 coprime to n.
EmbeddingMatrix BuildEmbedding(const RingParams& params, EmbeddingFlavor flavor);
// Same for any conductor n >= 3, with m = phi(n)/2 rows.
EmbeddingMatrix BuildEmbedding(u64 conductor, EmbeddingFlavor flavor);

// ||A||_F ||A^{-1}||_F. Throws SingularMatrixError.
double FrobeniusCondition(const Matrix& a);

// Closed forms for C_N: ||C||_F^2, ||C^{-1}||_F^2, kappa_F(C)^2.
double CosineNormSquared(std::size_t n);
double CosineInverseNormSquared(std::size_t n);
double CosineConditionSquared(std::size_t n);

struct EquivalenceReport {
  u64 conductor = 0;
  u64 m = 0;
  u64 cosine_length = 0;        // N = n/4
  double c_norm_sq = 0;         // ||C_N||_F^2
  double c_inv_norm_sq = 0;
  double c_cond_sq = 0;         // measured kappa_F(C_N)^2
  double c_cond_sq_closed = 0;  // N^2 + (N-1)/2
  double v_norm_sq = 0;
  double v_inv_norm_sq = 0;
  double v_cond_sq = 0;
  double v_cond_sq_over_n3 = 0;  // kappa_F(V)^2 / N^3
  bool closed_form_ok = false;   // 1e-6 relative
  bool norm_ok = false;          // ||V||^2 < ||C||^2
  bool inverse_norm_ok = false;  // ||V^{-1}||^2 < 2N ||C^{-1}||^2
  bool bound_ok = false;         // kappa(V)^2 < 2N kappa(C)^2

  bool ok() const { return closed_form_ok && norm_ok && inverse_norm_ok && bound_ok; }
};

// Requires s >= 1 (ParameterError otherwise).
EquivalenceReport VerifyEquivalenceBound(const RingParams& params);

// Row order of P: the stable partition of 0..N-1 putting the rows with
// 3 not dividing 2i+1 first.
std::vector<std::size_t> ConditioningRowOrder(std::size_t n);

// Column operation matrices for N = 3m/2 with m even: R1 adds column m - j'
// to column m + j' (j' = 1..m/2-1); R2 subtracts half of column 0 from
// column m and column j' from column m + j'.
Matrix ColumnOpsR1(std::size_t m);
Matrix ColumnOpsR2(std::size_t m);

struct BlockReport {
  u64 conductor = 0;
  u64 m = 0;
  u64 cosine_length = 0;
  bool permutation_ok = false;
  double top_left_err = 0;   // vs V, tolerance 1e-12
  double top_right_max = 0;  // tolerance 1e-10
  double c2_err = 0;         // C'' vs closed form, tolerance 1e-10
  double r_inverse_err = 0;  // R [[I,-F],[0,I]] - I
  double f_norm_sq = 0;      // ||F||_F^2 < N
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// P C_N R1 R2 = [[V, 0], [A, C'']]. C''_{k,0} = -3/2 and
// C''_{k,j'} = -3 cos(2 pi sigma_k j' / n) for j' >= 1, sigma_k = 2 p(m+k) + 1.
// Requires s >= 1.
BlockReport BlockDecompositionCheck(const RingParams& params);

}  // namespace realcyclo

#endif  // REALCYCLO_CONDITIONING_H_
