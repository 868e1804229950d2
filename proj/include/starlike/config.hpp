#pragma once

#include <array>
#include <cstddef>

namespace starlike {

// Library-wide numeric tolerances. Every inequality in the radius calculus is
// exact; these only absorb floating-point rounding.
struct Tolerances {
  double dominance_slack = 1e-10;
  double round_trip = 1e-12;
  double bisection = 1e-14;
  // Points closer than this to a region's boundary are treated as outside.
  double exclusion_band = 1e-10;
  double radius = 1e-8;
  double residual = 1e-9;
};

inline constexpr Tolerances default_tolerances{};

// Defaults for the randomized inequality suites.
namespace sampling {

inline constexpr std::size_t samples_per_family = 1000;
inline constexpr std::size_t boundary_samples = 64;
inline constexpr std::array<double, 9> radii{0.1, 0.2, 0.3, 0.4, 0.5,
                                             0.6, 0.7, 0.8, 0.9};
inline constexpr std::size_t max_blaschke_factors = 3;
inline constexpr double max_blaschke_modulus = 0.95;

}  // namespace sampling

// Boundary-curve discretization used for nearest-point searches and winding
// numbers.
namespace boundary_grid {

inline constexpr std::size_t samples = 4096;
inline constexpr std::size_t refined_minima = 3;
inline constexpr double refine_bracket = 1e-12;
inline constexpr int max_winding_depth = 52;

}  // namespace boundary_grid

}  // namespace starlike
