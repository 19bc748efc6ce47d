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
#include "realcyclo/chebyshev.h"

#include <string>

#include "realcyclo/errors.h"

namespace realcyclo {

IntPowerPoly VPoly(int i) {
  if (i < 0) throw ParameterError("negative Chebyshev degree");
  if (i == 0) return IntPowerPoly({1});
  if (i == 1) return IntPowerPoly({0, 1});
  std::vector<mpz_class> prev{0, 1};      // V_1
  std::vector<mpz_class> cur{-2, 0, 1};   // V_2
  for (int k = 3; k <= i; ++k) {
    std::vector<mpz_class> next(k + 1);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return IntPowerPoly(std::move(cur));
}

IntPowerPoly PsiPoly(const RingParams& params) {
  IntPowerPoly psi = VPoly(static_cast<int>(params.dimension));
  if (params.has_unit_shift()) psi.coeffs[0] -= 1;
  return IntPowerPoly(std::move(psi.coeffs));
}

namespace {

// Moebius function of a squarefree-or-not divisor.
int Moebius(u64 d) {
  int sign = 1;
  for (u64 p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;
      sign = -sign;
    }
  }
  if (d > 1) sign = -sign;
  return sign;
}

// f *= (x^k - 1)
void MulXkMinusOne(std::vector<mpz_class>& f, u64 k) {
  std::vector<mpz_class> out(f.size() + k);
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i + k] += f[i];
    out[i] -= f[i];
  }
  f = std::move(out);
}

// f /= (x^k - 1), exactly. Solving f = g x^k - g from the top: g_j = f_{j+k} + g_{j+k}.
void DivXkMinusOne(std::vector<mpz_class>& f, u64 k) {
  if (f.size() <= k) throw DomainError("inexact cyclotomic division");
  const std::size_t deg_g = f.size() - 1 - k;
  std::vector<mpz_class> g(deg_g + 1);
  for (std::size_t j = deg_g + 1; j-- > 0;) {
    g[j] = f[j + k] + (j + k <= deg_g ? g[j + k] : mpz_class(0));
  }
  // Low coefficients must agree: f_j = -g_j + g_{j-k}.
  for (std::size_t j = 0; j < k && j <= deg_g; ++j) {
    if (f[j] != -g[j]) throw DomainError("inexact cyclotomic division");
  }
  f = std::move(g);
}

}  // namespace

IntPowerPoly CyclotomicPoly(u64 n) {
  if (n == 0) throw ParameterError("cyclotomic index must be positive");
  std::vector<u64> plus, minus;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = Moebius(d);
    if (mu == 1) plus.push_back(n / d);
    if (mu == -1) minus.push_back(n / d);
  }
  std::vector<mpz_class> f{1};
  for (u64 k : plus) MulXkMinusOne(f, k);
  for (u64 k : minus) DivXkMinusOne(f, k);
  return IntPowerPoly(std::move(f));
}

IntChebPoly PsiFromCyclotomic(u64 n) {
  const IntPowerPoly phi = CyclotomicPoly(n);
  const auto deg = phi.degree();
  if (deg % 2 != 0) {
    throw ParameterError("cyclotomic degree of n=" + std::to_string(n) + " is odd");
  }
  const std::size_t m = static_cast<std::size_t>(deg / 2);
  std::vector<mpz_class> c(m + 1);
  for (std::size_t k = 0; k <= m; ++k) c[k] = phi.coeffs[m + k];
  return IntChebPoly(std::move(c));
}

}  // namespace realcyclo
