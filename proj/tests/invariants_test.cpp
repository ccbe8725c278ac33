#include <gtest/gtest.h>

#include "codim2/invariants.hpp"
#include "support.hpp"

using namespace codim2;

TEST(Normalize, Examples) {
  auto nc = normalize(Invariants::make(6, 55, 8, 5));
  EXPECT_EQ(nc.c1, 13);
  EXPECT_EQ(nc.c2, 41);
  EXPECT_EQ(nc.delta, 5);

  nc = normalize(Invariants::make(5, 10, 1, 2));
  EXPECT_EQ(nc.c1, 5);
  EXPECT_EQ(nc.c2, 4);
  EXPECT_EQ(nc.delta, 9);

  nc = normalize(Invariants::make(4, 10, 0, 5));
  EXPECT_EQ(nc.c1, 3);
  EXPECT_EQ(nc.c2, 6);
  EXPECT_EQ(nc.delta, -15);
}

TEST(Normalize, RejectsInvalidTuples) {
  EXPECT_THROW(Invariants::make(3, 10, 0, 2), Error);
  EXPECT_THROW(Invariants::make(5, 0, 0, 2), Error);
  EXPECT_THROW(Invariants::make(5, 10, 0, 0), Error);
  try {
    Invariants::make(3, 10, 0, 2);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

TEST(Normalize, RoundTripAndDiscriminantResidue) {
  for (int i = 0; i < 2000; ++i) {
    const Invariants inv = rnd::random_tuple();
    const NormalizedChern nc = normalize(inv);
    EXPECT_EQ(nc.c1 - inv.n() + 1, inv.e());
    EXPECT_EQ(nc.c2 + inv.e() + inv.n(), inv.d());
    const BigInt r = ((nc.delta % 4) + 4) % 4;
    EXPECT_TRUE(r == 0 || r == 1) << nc.delta;
  }
}

TEST(Spectral, Elliptic) {
  const SpectralData sd = spectral(normalized_from_chern(3, 6));
  EXPECT_EQ(sd.regime, Regime::Elliptic);
  EXPECT_LT(abs(sd.rho - sqrt(Real(6))), Real("1e-70"));
  EXPECT_LT(abs(sd.angle - Real("0.91173829096848763636")), Real("1e-18"));
}

TEST(Spectral, Parabolic) {
  const SpectralData sd = spectral(normalized_from_chern(8, 16));
  EXPECT_EQ(sd.regime, Regime::Parabolic);
  EXPECT_EQ(sd.rho, 4);
}

TEST(Spectral, Hyperbolic) {
  const SpectralData sd = spectral(normalized_from_chern(13, 40));
  EXPECT_EQ(sd.regime, Regime::Hyperbolic);
  EXPECT_LT(abs(*sd.a - 5), Real("1e-70"));
  EXPECT_LT(abs(*sd.b - 8), Real("1e-70"));
  // ln(8/sqrt 40)
  EXPECT_LT(abs(sd.angle - Real("0.23500181462286777683")), Real("1e-18"));
}

TEST(Spectral, Errors) {
  try {
    spectral(normalized_from_chern(3, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPositiveC2);
  }
  try {
    spectral(normalized_from_chern(-5, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeTrace);
  }
}

TEST(Spectral, HyperbolicRootsReproduceChernData) {
  int checked = 0;
  while (checked < 300) {
    const BigInt c1 = rnd::uniform(1, 10000);
    const BigInt c2 = rnd::uniform(1, 10000);
    if (c1 * c1 - 4 * c2 <= 0) continue;
    const SpectralData sd = spectral(normalized_from_chern(c1, c2));
    EXPECT_LE(abs(*sd.a * *sd.b - to_real(c2)) / to_real(c2), Real("1e-30"));
    EXPECT_LE(abs(*sd.a + *sd.b - to_real(c1)) / to_real(c1), Real("1e-30"));
    ++checked;
  }
}

TEST(Numeric, TimesSqrtComparisons) {
  // 11 sqrt 5 ~ 24.6
  EXPECT_TRUE(times_sqrt_le(11, 5, 25));
  EXPECT_FALSE(times_sqrt_le(11, 5, 24));
  EXPECT_TRUE(times_sqrt_le(-11, 5, -24));
  EXPECT_FALSE(times_sqrt_le(-11, 5, -25));
  EXPECT_TRUE(times_sqrt_le(3, 4, 6));
  EXPECT_FALSE(times_sqrt_lt(3, 4, 6));
  EXPECT_TRUE(times_sqrt_lt(-3, 4, -5));
  EXPECT_FALSE(times_sqrt_lt(-3, 4, -6));
  EXPECT_TRUE(times_sqrt_lt(0, 7, 1));
  EXPECT_FALSE(times_sqrt_lt(0, 7, 0));
  for (int i = 0; i < 5000; ++i) {
    const BigInt a = rnd::uniform(-300, 300), k = rnd::uniform(0, 50),
                 b = rnd::uniform(-3000, 3000);
    const long double lhs = static_cast<long double>(static_cast<std::int64_t>(a)) *
                            std::sqrt(static_cast<long double>(static_cast<std::int64_t>(k)));
    const long double rhs = static_cast<long double>(static_cast<std::int64_t>(b));
    if (std::abs(lhs - rhs) < 1e-6) continue;
    EXPECT_EQ(times_sqrt_le(a, k, b), lhs <= rhs);
    EXPECT_EQ(times_sqrt_lt(a, k, b), lhs < rhs);
  }
}

TEST(Numeric, Formatting) {
  EXPECT_EQ(to_fixed(Real("18.126"), 0), "18");
  EXPECT_EQ(to_fixed(Real("1.5"), 2), "1.50");
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_TRUE(is_perfect_square(144));
  EXPECT_FALSE(is_perfect_square(-4));
}
