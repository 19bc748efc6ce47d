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

#include "realcyclo/transform.h"

#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <numbers>
#include <random>

#include "realcyclo/errors.h"
#include "realcyclo/ring_params.h"
#include "test_util.h"

namespace realcyclo {
namespace {

u64 AdmissibleFor(std::size_t n) {
  const u64 order = 4 * n;
  for (u64 q = order + 1;; q += order) {
    if (IsPrime(q)) return q;
  }
}

TEST(DctTest, Examples) {
  const ModDctPlan p2 = MakeModDctPlan(2, Modulus::Prime(97));
  EXPECT_EQ(p2.Dct(std::vector<u64>{2, 0}), (std::vector<u64>{1, 1}));
  EXPECT_EQ(p2.Idct(std::vector<u64>{1, 1}), (std::vector<u64>{2, 0}));
  EXPECT_EQ(p2.DctNaive(std::vector<u64>{2, 0}), (std::vector<u64>{1, 1}));
  const ModDctPlan p1 = MakeModDctPlan(1, Modulus::Prime(97));
  EXPECT_EQ(p1.Dct(std::vector<u64>{10}), (std::vector<u64>{5}));
  const ModDctPlan p4 = MakeModDctPlan(4, Modulus::Prime(97));
  // IDCT(e_0)_j = cos(2 pi j / 16); the all-ones vector is C_4 e_0 = DCT(2 e_0).
  const std::vector<u64> col = p4.Idct(std::vector<u64>{1, 0, 0, 0});
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(col[j], p4.Cosine(static_cast<i64>(j)));
  EXPECT_EQ(p4.Dct(std::vector<u64>{2, 0, 0, 0}), (std::vector<u64>{1, 1, 1, 1}));
  const std::vector<double> colf = IdctReference(std::vector<double>{1, 0, 0, 0});
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_NEAR(colf[j], std::cos(2 * std::numbers::pi * static_cast<double>(j) / 16), 1e-15);
  }
  EXPECT_EQ(p4.Idct(std::vector<u64>(4, 0)), std::vector<u64>(4, 0));
}

TEST(DctTest, FloatExamples) {
  const std::vector<double> a{2, 0};
  const std::vector<double> d = DctReference(a);
  EXPECT_NEAR(d[0], 1.0, 1e-15);
  EXPECT_NEAR(d[1], 1.0, 1e-15);
  const ComplexDctPlan plan = MakeComplexDctPlan(2);
  const std::vector<double> f = DctFast(a, plan);
  EXPECT_NEAR(f[0], 1.0, 1e-12);
  EXPECT_NEAR(f[1], 1.0, 1e-12);
}

TEST(DctTest, RejectsMismatchedLength) {
  const ModDctPlan p4 = MakeModDctPlan(4, Modulus::Prime(97));
  EXPECT_THROW(p4.Dct(std::vector<u64>{1, 2, 3}), DomainError);
  EXPECT_THROW(MakeModDctPlan(5, Modulus::Prime(41)), ParameterError);
  EXPECT_THROW(MakeModDctPlan(8, Modulus::Prime(17)), InadmissibleModulusError);
}

TEST(DctTest, FastEqualsNaiveModular) {
  std::mt19937_64 rng(8);
  for (std::size_t n : {1, 2, 3, 4, 6, 8, 12, 16, 24, 48, 96}) {
    const u64 q = AdmissibleFor(n);
    const ModDctPlan plan = MakeModDctPlan(n, Modulus::Prime(q));
    for (int t = 0; t < 100; ++t) {
      const std::vector<u64> a = testing::RandomResidues(rng, n, q);
      ASSERT_EQ(plan.Dct(a), plan.DctNaive(a)) << n;
      ASSERT_EQ(plan.Idct(a), plan.IdctNaive(a)) << n;
    }
  }
}

TEST(DctTest, InversionModular) {
  std::mt19937_64 rng(9);
  for (std::size_t n : {2, 4, 8, 12, 16, 24, 48, 96}) {
    const u64 q = AdmissibleFor(n);
    const ModDctPlan plan = MakeModDctPlan(n, Modulus::Prime(q));
    const Zq& z = plan.domain();
    const u64 half_n = z.Mul(z.FromInt(static_cast<i64>(n)), plan.inv2());
    for (int t = 0; t < 100; ++t) {
      const std::vector<u64> a = testing::RandomResidues(rng, n, q);
      const std::vector<u64> back = plan.Idct(plan.Dct(a));
      for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(back[i], z.Mul(half_n, a[i]));
    }
  }
}

TEST(DctTest, InversionCompositeModulus) {
  const ModDctPlan plan = MakeModDctPlan(8, Modulus::Composite(97, 193));
  const Zq& z = plan.domain();
  std::mt19937_64 rng(10);
  const std::vector<u64> a = testing::RandomResidues(rng, 8, z.q());
  const std::vector<u64> back = plan.Idct(plan.Dct(a));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(back[i], z.Mul(4, a[i]));
}

TEST(DctTest, InversionFloat) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::size_t n : {2, 4, 8, 12, 16, 24, 48, 96}) {
    const ComplexDctPlan plan = MakeComplexDctPlan(n);
    for (int t = 0; t < 100; ++t) {
      std::vector<double> a(n);
      for (auto& v : a) v = u(rng);
      const std::vector<double> ref = IdctReference(DctReference(a));
      const std::vector<double> fast = IdctFast(DctFast(a, plan), plan);
      const std::vector<double> d1 = DctReference(a), d2 = DctFast(a, plan);
      for (std::size_t i = 0; i < n; ++i) {
        const double want = static_cast<double>(n) / 2 * a[i];
        ASSERT_NEAR(ref[i], want, 1e-9 * static_cast<double>(n));
        ASSERT_NEAR(fast[i], want, 1e-9 * static_cast<double>(n));
        ASSERT_NEAR(d1[i], d2[i], 1e-9 * static_cast<double>(n));
      }
    }
  }
}

TEST(DctTest, ComposedMapAgreesAcrossDomains) {
  // idct(dct(a)) is rational, so the float and modular results compare.
  std::mt19937_64 rng(12);
  for (std::size_t n : {4, 8, 12, 24, 48}) {
    const u64 q = AdmissibleFor(n);
    const ModDctPlan plan = MakeModDctPlan(n, Modulus::Prime(q));
    const Zq& z = plan.domain();
    for (int t = 0; t < 20; ++t) {
      std::vector<double> af(n);
      std::vector<u64> am(n);
      for (std::size_t i = 0; i < n; ++i) {
        const i64 v = static_cast<i64>(rng() % 21) - 10;
        af[i] = static_cast<double>(v);
        am[i] = z.FromInt(v);
      }
      const std::vector<double> f = IdctReference(DctReference(af));
      const std::vector<u64> m = plan.Idct(plan.Dct(am));
      for (std::size_t i = 0; i < n; ++i) {
        // n/2 * a_i with n even is an integer.
        ASSERT_EQ(z.FromInt(static_cast<i64>(std::llround(f[i]))), m[i]);
      }
    }
  }
}

TEST(DctTest, Orthogonality) {
  for (std::size_t n : {4, 6, 8, 12, 16}) {
    const u64 q = AdmissibleFor(n);
    const ModDctPlan plan = MakeModDctPlan(n, Modulus::Prime(q));
    const Zq& z = plan.domain();
    for (std::size_t j = 1; j < 2 * n; ++j) {
      u64 acc = 0;
      double accf = 0;
      for (std::size_t k = 0; k < n; ++k) {
        acc = z.Add(acc, plan.Cosine(static_cast<i64>((2 * k + 1) * j)));
        accf += std::cos(2 * std::numbers::pi * static_cast<double>((2 * k + 1) * j) /
                         static_cast<double>(4 * n));
      }
      EXPECT_EQ(acc, 0u) << n << " " << j;
      EXPECT_NEAR(accf, 0.0, 1e-9);
    }
  }
}

TEST(DctTest, OpCountIsQuasilinear) {
  std::vector<double> ratios;
  for (std::size_t n = 8; n <= 12288; n *= 2) {
    for (std::size_t len : {n, n * 3 / 2}) {
      if (len > 12288) continue;
      const u64 q = AdmissibleFor(len);
      const ModDctPlan plan = MakeModDctPlan(len, Modulus::Prime(q));
      OpCounter ops;
      plan.Dct(std::vector<u64>(len, 1), &ops);
      const double nlogn = static_cast<double>(len) * std::log2(static_cast<double>(len));
      ratios.push_back(static_cast<double>(ops.total()) / nlogn);
    }
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  EXPECT_LT(*hi / *lo, 2.0);
}

TEST(CosineMatrixTest, Examples) {
  const Matrix c1 = CosineMatrix(1);
  EXPECT_EQ(c1(0, 0), 1.0);
  EXPECT_EQ(ScaleDiagonal(1), std::vector<double>{2.0});
  const Matrix c2 = CosineMatrix(2);
  EXPECT_NEAR(c2(0, 1), std::sqrt(2.0) / 2, 1e-15);
  EXPECT_NEAR(c2(1, 1), -std::sqrt(2.0) / 2, 1e-15);
}

TEST(CosineMatrixTest, GramIsScaledDiagonal) {
  for (std::size_t n : {4, 6, 12, 32}) {
    const Matrix c = CosineMatrix(n);
    const Matrix g = c.Transpose() * c;
    const std::vector<double> s = ScaleDiagonal(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double want = i == j ? static_cast<double>(n) / 2 * s[i] : 0.0;
        EXPECT_NEAR(g(i, j), want, 1e-9);
      }
    }
  }
}

TEST(CosineMatrixTest, FrobeniusNormsClosedForm) {
  for (std::size_t n : {2, 3, 8, 24, 100, 256, 1024}) {
    const double d = static_cast<double>(n);
    const Matrix c = CosineMatrix(n);
    EXPECT_NEAR(c.FrobeniusNormSquared(), d + d * (d - 1) / 2, 1e-9 * d * d);
    if (n <= 256) {
      EXPECT_NEAR(Inverse(c).FrobeniusNormSquared(), (2 * d - 1) / d, 1e-9 * d);
    }
  }
}

}  // namespace
}  // namespace realcyclo
