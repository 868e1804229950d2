#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "starlike/random.hpp"
#include "starlike/regions.hpp"

namespace {

using namespace starlike;
using std::numbers::pi;
constexpr double e = std::numbers::e;

std::vector<Region> catalog() {
  std::vector<Region> regions{HalfPlane{0.0}, CenteredDisc{0.0}};
  for (const auto& r : named_regions()) regions.push_back(r);
  return regions;
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(Parabola{}, {1.0, 0.0}));
  EXPECT_FALSE(contains(Cardioid{}, {1.0 / 3.0, 0.0}));
  EXPECT_TRUE(contains(Lune{}, {1.0, 1.0}));
  // The mirror lune about -1 satisfies the inequality but is a different region.
  EXPECT_FALSE(contains(Lune{}, {-1.0, 0.0}));
  EXPECT_FALSE(contains(Lune{}, {-1.0, 1.0}));
  EXPECT_FALSE(contains(HalfPlane{0.0}, {0.0, 5.0}));
  EXPECT_FALSE(contains(ExpRegion{}, {-1.0, 0.0}));
  EXPECT_FALSE(contains(Sigmoid{}, {2.0, 0.0}));
  EXPECT_FALSE(contains(SineRegion{}, {NAN, 0.0}));
}

TEST(Contains, OneIsInsideEveryRegion) {
  for (const auto& region : catalog()) {
    EXPECT_TRUE(contains(region, {1.0, 0.0})) << region_name(region);
  }
  EXPECT_TRUE(contains(JanowskiDisc{0.5, -0.5}, {1.0, 0.0}));
  EXPECT_TRUE(contains(JanowskiDisc{1.0, 0.5}, {1.0, 0.0}));
}

TEST(Contains, BoundaryPointsAreExcluded) {
  for (const auto& region : catalog()) {
    if (!has_boundary_curve(region)) continue;
    for (int k = 0; k < 360; ++k) {
      const double theta = 2 * pi * k / 360;
      if (std::holds_alternative<Parabola>(region) && k == 0) continue;
      const ComplexPoint w = boundary_point(region, theta);
      ASSERT_FALSE(contains(region, w)) << region_name(region) << " theta=" << theta;
    }
  }
  for (const double t : {-3.0, 0.0, 2.5}) {
    EXPECT_FALSE(contains(HalfPlane{0.25}, {0.25, t}));
  }
}

TEST(BoundaryPoint, Examples) {
  EXPECT_NEAR(std::abs(boundary_point(Cardioid{}, pi) - 1.0 / 3.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(boundary_point(Nephroid{}, pi) - 1.0 / 3.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(boundary_point(SineRegion{}, 0.0) - oracle::frozen::one_plus_sin1), 0.0,
              1e-15);
  EXPECT_NEAR(std::abs(boundary_point(RationalRegion{}, pi) - 2.0 * (std::numbers::sqrt2 - 1)),
              0.0, 1e-15);
}

TEST(BoundaryPoint, RejectsUnboundedAndSingular) {
  EXPECT_THROW(boundary_point(HalfPlane{0.0}, 1.0), std::domain_error);
  EXPECT_THROW(boundary_point(JanowskiDisc{1.0, -1.0}, 1.0), std::domain_error);
  EXPECT_THROW(boundary_point(Parabola{}, 0.0), std::domain_error);
  EXPECT_THROW(boundary_point(Cardioid{}, INFINITY), std::domain_error);
}

TEST(ImplicitCurves, PolynomialsVanishOnTheirCurves) {
  for (int k = 0; k < 64; ++k) {
    const double theta = 2 * pi * k / 64;
    EXPECT_NEAR(detail::cardioid_polynomial(boundary_point(Cardioid{}, theta)), 0.0, 1e-11);
    EXPECT_NEAR(detail::nephroid_polynomial(boundary_point(Nephroid{}, theta)), 0.0, 1e-11);
  }
  EXPECT_LT(detail::cardioid_polynomial({1.0, 0.0}), 0.0);
  EXPECT_LT(detail::nephroid_polynomial({1.0, 0.0}), 0.0);
}

TEST(Inradius, Examples) {
  EXPECT_EQ(inradius_about_one(CenteredDisc{0.5}), 0.5);
  EXPECT_NEAR(inradius_about_one(ExpRegion{}), 1.0 - 1.0 / e, 1e-12);
  EXPECT_NEAR(inradius_about_one(Cardioid{}), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(inradius_about_one(Sigmoid{}), oracle::frozen::sigmoid_inradius, 1e-12);
}

TEST(Inradius, MatchesCatalogAndBruteForce) {
  for (const auto& region : named_regions()) {
    const double computed = inradius_about_one(region);
    EXPECT_NEAR(computed, *known_inradius_about_one(region), 1e-8) << region_name(region);
    const double brute = oracle::brute_force_distance(
        [&](double t) { return *detail::curve_point(region, t); }, {1.0, 0.0}, 200'000);
    EXPECT_LE(computed, brute + 1e-15) << region_name(region);
    EXPECT_NEAR(computed, brute, 1e-6) << region_name(region);
  }
}

TEST(DiscInDisc, Examples) {
  EXPECT_TRUE(disc_in_disc({1.0, 0.0}, 0.3, {1.0, 0.0}, 0.3));
  const double A = 1.0;
  const double B = -0.5;
  const double d = (A - B) / (1 + std::abs(B));
  const double a = (1 - A * B) / (1 - B * B);
  const double b = (A - B) / (1 - B * B);
  EXPECT_NEAR(std::abs(a - 1.0), b - d, 1e-15);
  EXPECT_TRUE(disc_in_disc({1.0, 0.0}, d - 1e-15, {a, 0.0}, b));
  EXPECT_FALSE(disc_in_disc({0.0, 0.0}, 1.0, {1.0, 0.0}, 1.0));
  EXPECT_THROW(disc_in_disc({0.0, 0.0}, -1.0, {0.0, 0.0}, 1.0), std::invalid_argument);
}

TEST(DiscInRegion, Examples) {
  EXPECT_TRUE(disc_in_region(Parabola{}, {1.0, 0.0}, 0.49));
  EXPECT_FALSE(disc_in_region(Parabola{}, {1.0, 0.0}, 0.51));
  EXPECT_FALSE(disc_in_region(HalfPlane{0.0}, {1.0, 0.0}, 1.0));
  EXPECT_TRUE(disc_in_region(Sigmoid{}, {1.0, 0.0}, 0.4));
  EXPECT_THROW(disc_in_region(Cardioid{}, {0.0, 0.0}, 0.1), std::invalid_argument);
  EXPECT_THROW(disc_in_region(Cardioid{}, {1.0, 0.0}, -0.1), std::invalid_argument);
}

TEST(DiscInRegion, SwitchesAtInradius) {
  std::vector<Region> regions = catalog();
  regions.push_back(JanowskiDisc{0.5, -0.5});
  regions.push_back(JanowskiDisc{0.3, -1.0});
  for (const auto& region : regions) {
    const double delta = *known_inradius_about_one(region);
    EXPECT_TRUE(disc_in_region(region, {1.0, 0.0}, delta - 1e-6)) << region_name(region);
    EXPECT_FALSE(disc_in_region(region, {1.0, 0.0}, delta + 1e-6)) << region_name(region);
  }
}

TEST(Winding, AgreesWithInequalityOnLuneAndExp) {
  for (const Region region : {Region{Lune{}}, Region{ExpRegion{}}}) {
    int disagreements = 0;
    for (std::uint64_t i = 0; i < 10'000; ++i) {
      SampleStream rng(31, 0, i);
      const ComplexPoint w{rng.uniform(-1.0, 4.0), rng.uniform(-2.5, 2.5)};
      const bool by_inequality = contains(region, w, 0.0);
      const bool by_winding = winding_number(region, w) == 1;
      if (by_inequality != by_winding) ++disagreements;
    }
    EXPECT_EQ(disagreements, 0) << region_name(region);
  }
}

TEST(Winding, ResolvesPointsNearTheCurve) {
  // Just inside and just outside the sine boundary on the real axis.
  const double edge = oracle::frozen::one_plus_sin1;
  EXPECT_EQ(winding_number(SineRegion{}, {edge - 1e-9, 0.0}), 1);
  EXPECT_EQ(winding_number(SineRegion{}, {edge + 1e-9, 0.0}), 0);
  EXPECT_FALSE(winding_number(Cardioid{}, boundary_point(Cardioid{}, 0.0)).has_value());
}

TEST(Janowski, ReducesToHalfPlaneAtBMinusOne) {
  for (std::uint64_t i = 0; i < 10'000; ++i) {
    SampleStream rng(32, 0, i);
    const double A = rng.uniform(-0.99, 1.0);
    const ComplexPoint w{rng.uniform(-2.0, 3.0), rng.uniform(-3.0, 3.0)};
    ASSERT_EQ(contains(JanowskiDisc{A, -1.0}, w), contains(HalfPlane{(1 - A) / 2}, w))
        << "A=" << A << " w=" << w;
  }
}

TEST(Janowski, CircleMatchesImageOfDisc) {
  const JanowskiDisc j{0.7, -0.4};
  for (int k = 0; k < 32; ++k) {
    const ComplexPoint z = std::polar(1.0, 2 * pi * k / 32);
    const ComplexPoint w = (1.0 + j.A * z) / (1.0 + j.B * z);
    EXPECT_NEAR(distance_to_boundary(j, w), 0.0, 1e-14);
  }
}

TEST(Validation, RejectsOutOfRangeParameters) {
  EXPECT_THROW(half_plane(1.5), std::invalid_argument);
  EXPECT_THROW(centered_disc(-0.1), std::invalid_argument);
  EXPECT_THROW(janowski_disc(0.5, 0.5), std::invalid_argument);
  EXPECT_THROW(janowski_disc(1.5, 0.0), std::invalid_argument);
  EXPECT_THROW(janowski_disc(0.0, -1.5), std::invalid_argument);
  try {
    half_plane(1.5);
  } catch (const std::invalid_argument& err) {
    EXPECT_STREQ(err.what(), "alpha must lie in [0,1)");
  }
}

TEST(Names, TokensRoundTrip) {
  for (const auto& region : named_regions()) {
    const auto back = named_region(region_name(region));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->index(), region.index());
  }
  EXPECT_FALSE(named_region("halfplane").has_value());
  EXPECT_FALSE(named_region("moon").has_value());
}

}  // namespace
