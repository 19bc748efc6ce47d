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

#include "realcyclo/rootscan.h"

#include <gtest/gtest.h>

#include <sstream>

#include "realcyclo/basis.h"
#include "realcyclo/chebyshev.h"
#include "realcyclo/errors.h"

namespace realcyclo {
namespace {

TEST(SieveTest, SmallRanges) {
  EXPECT_EQ(PrimesUpTo(1), std::vector<u64>{});
  EXPECT_EQ(PrimesUpTo(30), (std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(PrimesUpTo(1000000).size(), 78498u);
  const std::vector<u64> big = PrimesUpTo(200000);
  for (u64 p : big) ASSERT_TRUE(IsPrime(p));
  EXPECT_EQ(big.size(), 17984u);
}

TEST(EvalCyclotomicTest, Examples) {
  EXPECT_EQ(EvalCyclotomicPrimeAt(5, 3, 11), 0u);
  EXPECT_EQ(EvalCyclotomicPrimeAt(3, 2, 7), 0u);
  EXPECT_EQ(EvalCyclotomicPrimeAt(61, 2, 2305843009213693951ULL), 0u);
  EXPECT_EQ(EvalCyclotomicPrimeAt(5, 12, 11), 5u);  // alpha = 1 mod q
  EXPECT_EQ(EvalCyclotomicPrimeAt(5, 2, 7), 31u % 7);
}

TEST(EvalMaxrealTest, Examples) {
  // Psi_28(3) = 281 = 8 mod 13.
  EXPECT_EQ(FamilyValue(Family::kMaxReal, 7, 3), 281);
  EXPECT_EQ(EvalMaxreal4pAt(7, 3, 13), 8u);
  // Psi_12 = x^2 - 3: 13 | 16 - 3 and 61 | 64 - 3.
  EXPECT_EQ(EvalMaxreal4pAt(3, 4, 13), 0u);
  EXPECT_EQ(EvalMaxreal4pAt(3, -8, 61), 0u);
  // alpha = +-2 never vanishes: Psi_4p(+-2) = 1.
  for (u64 p : {3, 5, 7, 23, 97}) {
    for (u64 q : {5, 7, 11, 13, 10007}) {
      EXPECT_EQ(EvalMaxreal4pAt(p, 2, q), 1u);
      EXPECT_EQ(EvalMaxreal4pAt(p, -2, q), 1u);
    }
  }
}

TEST(EvalMaxrealTest, AgreesWithExactHorner) {
  for (u64 p = 3; p <= 200; ++p) {
    if (!IsPrime(p)) continue;
    const IntPowerPoly psi = ChebToPowerRef(IntegerRing{}, PsiFromCyclotomic(4 * p));
    for (u64 q : {5ULL, 7ULL, 13ULL, 101ULL, 4969ULL, 1000003ULL}) {
      const Zq z(Modulus::Prime(q));
      const PowerPoly<u64> psi_q = ReduceInto(z, psi);
      for (i64 alpha : {-8, -4, -3, -2, 2, 3, 4, 8, 0, 5, 17}) {
        ASSERT_EQ(EvalMaxreal4pAt(p, alpha, q), EvalPoly(z, psi_q, z.FromInt(alpha)))
            << "p=" << p << " alpha=" << alpha << " q=" << q;
      }
    }
  }
}

TEST(EvalMaxrealTest, EqualsVpOverX) {
  const IntegerRing z;
  for (int p : {3, 5, 7, 11, 13}) {
    const IntPowerPoly psi = ChebToPowerRef(z, PsiFromCyclotomic(4 * static_cast<u64>(p)));
    EXPECT_EQ(PolyMul(z, psi, IntPowerPoly({0, 1})), VPoly(p));
  }
}

TEST(FactorPathTest, Examples) {
  EXPECT_EQ(FactorPath(Family::kCyclotomic, 3, 2, 10), (std::vector<u64>{7}));
  EXPECT_EQ(FactorPath(Family::kCyclotomic, 5, 2, 40), (std::vector<u64>{31}));
  EXPECT_EQ(FactorPath(Family::kCyclotomic, 5, 3, 200), (std::vector<u64>{11}));
  EXPECT_EQ(FamilyValue(Family::kCyclotomic, 5, 3), 121);
  EXPECT_EQ(FactorPath(Family::kMaxReal, 23, 3, 300000), (std::vector<u64>{4969, 275449}));
  EXPECT_EQ(FactorPath(Family::kMaxReal, 23, -4, 5000000), (std::vector<u64>{277, 3037, 4244329}));
  EXPECT_EQ(FamilyValue(Family::kCyclotomic, 61, 2), mpz_class("2305843009213693951"));
}

TEST(ScanTest, ConfigValidation) {
  ScanConfig c{.p_max = 2, .q_max = 100};
  EXPECT_THROW(c.Validate(), ParameterError);
  c.p_max = 10;
  c.alphas = {2, 1};
  EXPECT_THROW(c.Validate(), ParameterError);
  c.alphas = {};
  EXPECT_THROW(c.Validate(), ParameterError);
  c.alphas = {2};
  c.families = {};
  EXPECT_THROW(c.Validate(), ParameterError);
  EXPECT_EQ(ParseFamily("cyclo"), Family::kCyclotomic);
  EXPECT_EQ(ParseFamily("maxreal"), Family::kMaxReal);
  EXPECT_FALSE(ParseFamily("other").has_value());
}

TEST(ScanTest, SmallScanGroundTruth) {
  const ScanConfig config{.p_max = 3, .q_max = 100};
  const ScanResult r = Scan(config, ScanStrategy::kModular);
  // Phi_3(2) = 7; Psi_12(+-4) = 13, Psi_12(+-8) = 61.
  EXPECT_EQ(r.counts.Get(Family::kMaxReal, 4), 1u);
  EXPECT_EQ(r.counts.Get(Family::kMaxReal, -8), 1u);
  bool saw7 = false;
  for (const ScanRecord& rec : r.records) {
    saw7 |= rec.family == Family::kCyclotomic && rec.alpha == 2 && rec.q == 7;
    EXPECT_TRUE(VerifyRecord(rec));
  }
  EXPECT_TRUE(saw7);
}

TEST(ScanTest, DualPathsAgreeAndAreDeterministic) {
  const ScanConfig config{.p_max = 100, .q_max = 100000};
  const ScanResult factor = Scan(config, ScanStrategy::kFactor, 1);
  const ScanResult modular = Scan(config, ScanStrategy::kModular, 1);
  const ScanResult modular4 = Scan(config, ScanStrategy::kModular, 4);
  const ScanResult factor3 = Scan(config, ScanStrategy::kFactor, 3);
  EXPECT_EQ(factor.records, modular.records);
  EXPECT_EQ(factor.counts, modular.counts);
  EXPECT_EQ(modular.records, modular4.records);
  EXPECT_EQ(factor.records, factor3.records);
  std::ostringstream a, b;
  WriteScanCsv(a, modular.records);
  WriteScanCsv(b, modular4.records);
  EXPECT_EQ(a.str(), b.str());
  for (i64 alpha : {2, 3, 4, 8}) {
    EXPECT_EQ(modular.counts.Get(Family::kMaxReal, alpha), modular.counts.Get(Family::kMaxReal, -alpha));
  }
  EXPECT_EQ(modular.counts.Get(Family::kMaxReal, 2), 0u);
  for (const ScanRecord& rec : modular.records) ASSERT_TRUE(VerifyRecord(rec)) << rec.p << " " << rec.q;
}

TEST(ScanTest, CsvFormat) {
  std::ostringstream os;
  WriteScanCsv(os, {{Family::kMaxReal, 23, 4969, -3}});
  EXPECT_EQ(os.str(), "family,p,degree,q,alpha\r\nmaxreal,23,22,4969,-3\r\n");
}

}  // namespace
}  // namespace realcyclo
