#include "duality/field.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace duality;

namespace {

int totient(int n) {
  int c = 0;
  for (int k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

CyclotomicField::value_type randomElement(const CyclotomicField& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  auto v = F.zero();
  for (auto& c : v) c = makeRational(num(rng), den(rng));
  return v;
}

}  // namespace

TEST(Cyclotomic, DegreeIsTotient) {
  for (int n = 1; n <= 30; ++n) EXPECT_EQ(CyclotomicField(n).degree(), static_cast<std::size_t>(totient(n))) << n;
}

TEST(Cyclotomic, RootsEmbedOnTheUnitCircle) {
  for (int N : {1, 2, 3, 4, 5, 6, 8, 9, 12}) {
    const CyclotomicField F(N);
    const int full = N % 2 == 0 ? N : 2 * N;
    for (int n = 1; n <= full; ++n) {
      if (full % n != 0) {
        EXPECT_FALSE(F.supportsRootOfUnity(n));
        EXPECT_THROW((void)F.rootOfUnity(n, 1), std::domain_error);
        continue;
      }
      for (int k = -n; k < 2 * n; ++k) {
        const auto z = F.embed(F.rootOfUnity(n, k));
        const auto want = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
        ASSERT_LT(std::abs(z - want), 1e-12) << "N=" << N << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Cyclotomic, RootPowersCloseExactly) {
  for (int N : {2, 3, 4, 6, 12}) {
    const CyclotomicField F(N);
    const auto z = F.rootOfUnity(N, 1);
    auto acc = F.one();
    for (int k = 0; k < N; ++k) {
      EXPECT_EQ(acc, F.rootOfUnity(N, k));
      acc = F.mul(acc, z);
    }
    EXPECT_EQ(acc, F.one());
  }
}

TEST(Cyclotomic, Z4ZetaIsI) {
  const CyclotomicField F(4);
  const auto i = F.rootOfUnity(4, 1);
  EXPECT_EQ(F.mul(i, i), F.fromInt(-1));
  EXPECT_EQ(F.conj(i), F.neg(i));
}

TEST(CyclotomicProperty, FieldAxioms) {
  std::mt19937_64 rng(31);
  for (int N : {3, 5, 8, 12}) {
    const CyclotomicField F(N);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = randomElement(F, rng), b = randomElement(F, rng), c = randomElement(F, rng);
      ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
      ASSERT_EQ(F.mul(a, b), F.mul(b, a));
      ASSERT_EQ(F.conj(F.conj(a)), a);
      ASSERT_EQ(F.conj(F.mul(a, b)), F.mul(F.conj(a), F.conj(b)));
      // the embedding is a ring homomorphism
      ASSERT_LT(std::abs(F.embed(F.mul(a, b)) - F.embed(a) * F.embed(b)), 1e-9);
      ASSERT_LT(std::abs(F.embed(F.conj(a)) - std::conj(F.embed(a))), 1e-9);
      if (!F.isZero(a)) ASSERT_EQ(F.mul(a, F.inv(a)), F.one());
    }
  }
}

TEST(Cyclotomic, ResidualIsPositiveForDistinctValues) {
  const CyclotomicField F(6);
  const auto a = F.one();
  auto b = F.one();
  b[0] += makeRational(1, 1000000000);
  EXPECT_EQ(F.residual(a, a), 0.0);
  EXPECT_GT(F.residual(a, b), 0.0);
  EXPECT_THROW((void)F.inv(F.zero()), std::domain_error);
}

TEST(ComplexFieldTest, QuarterTurnsAreExact) {
  const ComplexField F;
  EXPECT_EQ(F.rootOfUnity(4, 1), std::complex<double>(0.0, 1.0));
  EXPECT_EQ(F.rootOfUnity(2, 1), std::complex<double>(-1.0, 0.0));
  EXPECT_EQ(F.rootOfUnity(8, 6), std::complex<double>(0.0, -1.0));
  EXPECT_TRUE(F.eq({1.0, 0.0}, {1.0 + 1e-12, 0.0}));
  EXPECT_FALSE(F.eq({1.0, 0.0}, {1.0 + 1e-6, 0.0}));
}
