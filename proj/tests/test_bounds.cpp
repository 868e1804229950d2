#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "starlike/bounds.hpp"
#include "starlike/random.hpp"

namespace {

using namespace starlike;
using oracle::mp50;
constexpr double e = std::numbers::e;

TEST(SqrtFactorBound, Examples) {
  EXPECT_EQ(sqrt_factor_bound(0.0), 0.0);
  EXPECT_EQ(sqrt_factor_bound(0.5), 0.5);
  const SubordinateFactor p{FactorKind::SqrtOnePlus, SchwarzMap::identity()};
  for (const double r : {0.1, 0.37, 0.8}) {
    EXPECT_NEAR(std::abs(log_derivative_factor(p, {-r, 0.0})), sqrt_factor_bound(r), 1e-15);
  }
}

TEST(ExpFactorBound, Examples) {
  EXPECT_EQ(exp_factor_bound(0.2), 0.2);
  EXPECT_NEAR(exp_factor_bound(0.6), 0.7225, 1e-15);
  EXPECT_NEAR(sqrt2_minus_1, oracle::frozen::sqrt2_minus_1, 2e-16);
  EXPECT_EQ(exp_factor_bound(sqrt2_minus_1), sqrt2_minus_1);
}

TEST(ExpFactorBound, BranchesMeetAtSqrt2Minus1) {
  // The quartic branch evaluated at r^2 = 3 - 2 sqrt2, in 50 digits.
  const mp50 r = sqrt(mp50(2)) - 1;
  const mp50 quartic = pow(1 + r * r, 2) / (4 * (1 - r * r));
  EXPECT_LT(abs(quartic - r), mp50("1e-45"));

  const double eps = 1e-8;
  const double jump =
      std::abs(exp_factor_bound(sqrt2_minus_1 - eps) - exp_factor_bound(sqrt2_minus_1 + eps));
  EXPECT_LE(jump, 10 * eps);
  const double above = std::nextafter(sqrt2_minus_1, 1.0);
  EXPECT_LE(std::abs(exp_factor_bound(above) - exp_factor_bound(sqrt2_minus_1)), 1e-8);
}

TEST(FactorModulusRange, Examples) {
  const auto unit = factor_modulus_range(FactorKind::SqrtOnePlus, 0.0);
  EXPECT_EQ(unit.lo, 1.0);
  EXPECT_EQ(unit.hi, 1.0);
  const auto sqrt_range = factor_modulus_range(FactorKind::SqrtOnePlus, 0.75);
  EXPECT_EQ(sqrt_range.lo, 0.5);
  EXPECT_NEAR(sqrt_range.hi, oracle::frozen::sqrt_1_75, 1e-16);
  const auto exp_range = factor_modulus_range(FactorKind::Exp, 0.5);
  EXPECT_NEAR(exp_range.lo, oracle::frozen::exp_minus_half, 1e-16);
  EXPECT_NEAR(exp_range.hi, oracle::frozen::exp_half, 1e-15);
  EXPECT_TRUE(exp_range.contains(1.0));
  EXPECT_FALSE(exp_range.contains(2.0));
}

TEST(MemberBound, Examples) {
  EXPECT_NEAR(member_bound({Family::T1}, 0.4), 1.0, 1e-15);
  EXPECT_NEAR(member_bound({Family::T2}, 1.0 / 3.0), 1.0, 1e-15);
  EXPECT_EQ(member_bound({Family::T1}, 0.0), 0.0);
}

TEST(MemberGrowthRange, Examples) {
  const auto zero = member_growth_range(Family::T1, 0.0);
  EXPECT_EQ(zero.lo, 0.0);
  EXPECT_EQ(zero.hi, 0.0);
  const auto t1 = member_growth_range(Family::T1, 0.5);
  EXPECT_NEAR(t1.lo, oracle::frozen::t1_growth_lo_half, 1e-16);
  EXPECT_NEAR(t1.hi, oracle::frozen::t1_growth_hi_half, 1e-15);
  const auto t2 = member_growth_range(Family::T2, 1.0 / 3.0);
  EXPECT_NEAR(t2.lo, oracle::frozen::t2_growth_lo_third, 1e-16);
  EXPECT_NEAR(t2.hi, oracle::frozen::t2_growth_hi_third, 1e-15);
}

TEST(MultiprecisionOracle, GrowthValuesRecomputed) {
  using namespace oracle::frozen;
  const mp50 half("0.5");
  const mp50 third = mp50(1) / 3;
  EXPECT_DOUBLE_EQ(t1_growth_lo_half, (half * pow(half, mp50("1.5"))).convert_to<double>());
  EXPECT_DOUBLE_EQ(t1_growth_hi_half,
                   (half * pow(1 + half, mp50("1.5"))).convert_to<double>());
  EXPECT_DOUBLE_EQ(t2_growth_lo_third, (third * exp(mp50(-1))).convert_to<double>());
  EXPECT_DOUBLE_EQ(t2_growth_hi_third, (third * exp(mp50(1))).convert_to<double>());
  const mp50 em = exp(mp50(1));
  EXPECT_DOUBLE_EQ(t1_exp_radius, ((2 * em - 2) / (5 * em - 2)).convert_to<double>());
}

TEST(InvertMemberBound, Examples) {
  EXPECT_NEAR(invert_member_bound({Family::T1}, 2.0 / 3.0), 4.0 / 13.0, 1e-15);
  EXPECT_NEAR(invert_member_bound({Family::T2}, 1.0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(invert_member_bound({Family::T1}, 1.0 - 1.0 / e), oracle::frozen::t1_exp_radius,
              1e-15);
}

TEST(InvertMemberBound, QuarticBranch) {
  // delta above 3(sqrt2 - 1) lands on the second branch of the T2 profile.
  for (const double r : {0.42, 0.6, 0.9, 0.97}) {
    const double delta = member_bound({Family::T2}, r);
    EXPECT_NEAR(invert_member_bound({Family::T2}, delta), r, 1e-12) << "r=" << r;
  }
}

TEST(InvertMemberBound, RejectsNonPositive) {
  EXPECT_THROW(invert_member_bound({Family::T1}, 0.0), std::domain_error);
  EXPECT_THROW(invert_member_bound({Family::T2}, -1.0), std::domain_error);
  EXPECT_THROW(invert_member_bound({Family::T2}, NAN), std::domain_error);
}

TEST(Bounds, RejectRadiusOutsideUnitInterval) {
  EXPECT_THROW(sqrt_factor_bound(1.0), std::domain_error);
  EXPECT_THROW(exp_factor_bound(-0.1), std::domain_error);
  EXPECT_THROW(member_growth_range(Family::T1, 1.5), std::domain_error);
  EXPECT_THROW(factor_modulus_range(FactorKind::Exp, NAN), std::domain_error);
}

TEST(BoundsProperty, MonotoneOnRandomPairs) {
  for (const Family family : {Family::T1, Family::T2}) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      SampleStream rng(21, static_cast<std::uint64_t>(family), i);
      double r1 = rng.uniform(0.0, 0.99);
      double r2 = rng.uniform(0.0, 0.99);
      if (r1 == r2) continue;
      if (r1 > r2) std::swap(r1, r2);
      ASSERT_LT(member_bound({family}, r1), member_bound({family}, r2))
          << "r1=" << r1 << " r2=" << r2;
    }
  }
}

TEST(BoundsProperty, InverseRoundTrip) {
  for (const Family family : {Family::T1, Family::T2}) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      SampleStream rng(22, static_cast<std::uint64_t>(family), i);
      const double r = rng.uniform(1e-6, 0.99);
      const double back = invert_member_bound({family}, member_bound({family}, r));
      ASSERT_NEAR(back, r, 1e-12) << "r=" << r;
    }
  }
}

}  // namespace
