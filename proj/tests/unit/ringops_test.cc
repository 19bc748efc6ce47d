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

#include <gtest/gtest.h>

#include <random>

#include "realcyclo/chebyshev.h"
#include "realcyclo/errors.h"
#include "test_util.h"

namespace realcyclo {
namespace {

ModChebPoly RandomCheb(std::mt19937_64& rng, const RingContext& ctx) {
  return ModChebPoly(testing::RandomResidues(rng, ctx.params().dimension, ctx.zq().q()));
}

TEST(MulSchoolbookTest, Examples) {
  const RingContext ctx(RingParams::Derive(3, 0), Modulus::Prime(97));
  EXPECT_EQ(MulSchoolbook(ModPowerPoly({0, 1}), ModPowerPoly({0, 1}), ctx), ModPowerPoly({2}));
  EXPECT_EQ(MulSchoolbook(ModPowerPoly({1}), ModPowerPoly({5, 7}), ctx), ModPowerPoly({5, 7}));
  EXPECT_THROW(MulSchoolbook(ModPowerPoly({1, 1, 1}), ModPowerPoly({1}), ctx), DomainError);
}

TEST(ChebMulLinearTest, Examples) {
  const IntegerRing z;
  using testing::IntCheb;
  EXPECT_EQ(ChebMulLinear(z, IntCheb({0, 1}), IntCheb({0, 1})), IntCheb({2, 0, 1}));
  EXPECT_EQ(ChebMulLinear(z, IntCheb({1}), IntCheb({3, -1, 4})), IntCheb({3, -1, 4}));
  EXPECT_EQ(ChebMulLinear(z, IntCheb({0, 0, 1}), IntCheb({0, 0, 0, 1})),
            IntCheb({0, 1, 0, 0, 0, 1}));
}

TEST(ChebMulLinearTest, MatchesPowerBasisProduct) {
  const IntegerRing z;
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    std::vector<mpz_class> a(1 + rng() % 12), b(1 + rng() % 12);
    for (auto& v : a) v = static_cast<long>(rng() % 19) - 9;
    for (auto& v : b) v = static_cast<long>(rng() % 19) - 9;
    const IntChebPoly f(a), g(b);
    EXPECT_EQ(ChebToPowerRef(z, ChebMulLinear(z, f, g)),
              PolyMul(z, ChebToPowerRef(z, f), ChebToPowerRef(z, g)));
  }
}

TEST(ReduceModPsiTest, Examples) {
  const IntegerRing z;
  const RingParams p = RingParams::Derive(3, 1);  // m = 4
  using testing::IntCheb;
  EXPECT_EQ(ReduceModPsi(z, IntCheb({0, 0, 0, 0, 1}), p), IntCheb({1}));
  EXPECT_EQ(ReduceModPsi(z, IntCheb({0, 0, 0, 0, 0, 1}), p), IntCheb({0, 1, 0, -1}));
  EXPECT_EQ(ReduceModPsi(z, IntCheb({3, 1, 4}), p), IntCheb({3, 1, 4}));
  EXPECT_THROW(ReduceModPsi(z, IntCheb({0, 0, 0, 0, 0, 0, 0, 1}), p), DomainError);
}

TEST(ReduceModPsiTest, AgreesWithPowerBasisRemainder) {
  const IntegerRing z;
  for (int r = 3; r <= 5; ++r) {
    for (int s = 0; s <= 2; ++s) {
      const RingParams p = RingParams::Derive(r, s);
      const IntPowerPoly psi = PsiPoly(p);
      for (std::size_t k = 0; k + 1 < 2 * p.dimension; ++k) {
        std::vector<mpz_class> e(k + 1, 0);
        e[k] = 1;
        const IntChebPoly reduced = ReduceModPsi(z, IntChebPoly(e), p);
        EXPECT_EQ(ChebToPowerRef(z, reduced), PolyRemMonic(z, VPoly(static_cast<int>(k)), psi))
            << "n=" << p.conductor << " k=" << k;
      }
    }
  }
}

TEST(ChebMulFastTest, Examples) {
  const RingContext ctx(RingParams::Derive(3, 0), Modulus::Prime(97));
  EXPECT_EQ(ChebMulFast(ModChebPoly({0, 1}), ModChebPoly({0, 1}), ctx), ModChebPoly({2}));
  const RingContext ctx24(RingParams::Derive(3, 1), Modulus::Prime(97));
  std::mt19937_64 rng(14);
  const ModChebPoly g = RandomCheb(rng, ctx24);
  EXPECT_EQ(ChebMulFast(ModChebPoly({1}), g, ctx24), g);
  EXPECT_THROW(ChebMulFast(ModChebPoly({1, 1, 1, 1, 1}), g, ctx24), DomainError);
}

TEST(ChebMulFastTest, RejectsInadmissibleModulus) {
  EXPECT_THROW(RingContext(RingParams::Derive(3, 1), Modulus::Prime(17)), InadmissibleModulusError);
}

struct RingCase {
  int r, s;
};

class OracleEquivalenceTest : public ::testing::TestWithParam<RingCase> {};

TEST_P(OracleEquivalenceTest, ThreePathsAgree) {
  const RingParams p = RingParams::Derive(GetParam().r, GetParam().s);
  const u64 q1 = NextAdmissiblePrime(p);
  const u64 q2 = NextAdmissiblePrime(p, q1);
  std::mt19937_64 rng(15);
  for (u64 q : {q1, q2}) {
    const RingContext ctx(p, Modulus::Prime(q));
    const Zq& z = ctx.zq();
    for (int t = 0; t < 200; ++t) {
      const ModChebPoly f = RandomCheb(rng, ctx), g = RandomCheb(rng, ctx);
      const ModChebPoly fast = ChebMulFast(f, g, ctx);
      ASSERT_LT(fast.degree(), static_cast<std::int64_t>(p.dimension));
      ASSERT_EQ(fast, ReduceModPsi(z, ChebMulLinear(z, f, g), p));
      const ModPowerPoly school =
          MulSchoolbook(ChebToPowerRef(z, f), ChebToPowerRef(z, g), ctx);
      ASSERT_EQ(fast, PowerToChebRef(z, school));
      ASSERT_EQ(MulPowerFast(ChebToPowerRef(z, f), ChebToPowerRef(z, g), ctx), school);
    }
  }
}

TEST_P(OracleEquivalenceTest, RingAxioms) {
  const RingParams p = RingParams::Derive(GetParam().r, GetParam().s);
  const RingContext ctx(p, Modulus::Prime(NextAdmissiblePrime(p)));
  const Zq& z = ctx.zq();
  std::mt19937_64 rng(16);
  for (int t = 0; t < 500; ++t) {
    const ModChebPoly a = RandomCheb(rng, ctx), b = RandomCheb(rng, ctx), c = RandomCheb(rng, ctx);
    ASSERT_EQ(ChebMulFast(a, b, ctx), ChebMulFast(b, a, ctx));
    std::vector<u64> bc(p.dimension);
    for (std::size_t i = 0; i < p.dimension; ++i) bc[i] = z.Add(b.coeff(i), c.coeff(i));
    const ModChebPoly lhs = ChebMulFast(a, ModChebPoly(bc), ctx);
    const ModChebPoly ab = ChebMulFast(a, b, ctx), ac = ChebMulFast(a, c, ctx);
    std::vector<u64> rhs(p.dimension);
    for (std::size_t i = 0; i < p.dimension; ++i) rhs[i] = z.Add(ab.coeff(i), ac.coeff(i));
    ASSERT_EQ(lhs, ModChebPoly(rhs));
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, OracleEquivalenceTest,
                         ::testing::Values(RingCase{4, 0}, RingCase{5, 0}, RingCase{3, 1},
                                           RingCase{4, 1}, RingCase{5, 1}, RingCase{4, 2}));

TEST(ChebMulFastTest, CompositeModulusProjects) {
  const RingParams p = RingParams::Derive(3, 1);
  const RingContext both(p, Modulus::Composite(97, 193));
  const RingContext c1(p, Modulus::Prime(97));
  const RingContext c2(p, Modulus::Prime(193));
  std::mt19937_64 rng(17);
  auto project = [](const ModChebPoly& f, u64 q) {
    std::vector<u64> v(f.coeffs);
    for (auto& x : v) x %= q;
    return ModChebPoly(v);
  };
  for (int t = 0; t < 200; ++t) {
    const ModChebPoly f = RandomCheb(rng, both), g = RandomCheb(rng, both);
    const ModChebPoly h = ChebMulFast(f, g, both);
    EXPECT_EQ(project(h, 97), ChebMulFast(project(f, 97), project(g, 97), c1));
    EXPECT_EQ(project(h, 193), ChebMulFast(project(f, 193), project(g, 193), c2));
  }
}

TEST(ChebMulFastTest, ReductionIdentitiesExact) {
  for (u64 m : {4, 8, 12, 24}) {
    const RingParams p = m == 4 ? RingParams::Derive(3, 1)
                         : m == 8 ? RingParams::Derive(4, 1)
                         : m == 12 ? RingParams::Derive(3, 2)
                                   : RingParams::Derive(4, 2);
    ASSERT_EQ(p.dimension, m);
    const IntegerRing z;
    EXPECT_EQ(ReduceModPsi(z, testing::IntCheb({}), p), IntChebPoly());
    std::vector<mpz_class> vm(m + 1, 0);
    vm[m] = 1;
    EXPECT_EQ(ReduceModPsi(z, IntChebPoly(vm), p), testing::IntCheb({1}));
    const IntPowerPoly psi = PsiPoly(p);
    EXPECT_EQ(PolyRemMonic(z, VPoly(static_cast<int>(m)), psi), testing::IntPower({1}));
    for (u64 i = 1; i < m; ++i) {
      std::vector<mpz_class> e(m + i + 1, 0), want(m, 0);
      e[m + i] = 1;
      want[i] += 1;
      want[m - i] -= 1;
      // V_{m+i} - V_i + V_{m-i} is a multiple of Psi_n, for every i.
      const IntPowerPoly lhs = PolyRemMonic(z, VPoly(static_cast<int>(m + i)), psi);
      EXPECT_EQ(lhs, PolyRemMonic(z, ChebToPowerRef(z, IntChebPoly(want)), psi)) << m << " " << i;
      // The folding formula covers V-degree <= 2m - 2.
      if (m + i <= 2 * m - 2) {
        EXPECT_EQ(ReduceModPsi(z, IntChebPoly(e), p), IntChebPoly(want)) << m << " " << i;
      } else {
        EXPECT_THROW(ReduceModPsi(z, IntChebPoly(e), p), DomainError);
      }
    }
  }
}

}  // namespace
}  // namespace realcyclo
