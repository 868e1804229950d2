#pragma once

// Reproducible sampling of Schwarz maps, factors and class members.
//
// Every sample owns an independent std::mt19937_64 seeded with
// splitmix64(seed ^ splitmix64(stream ^ splitmix64(index))). The engine's
// output sequence is fixed by the C++ standard, and doubles are formed from the
// top 53 bits of each draw (never through std::uniform_real_distribution, whose
// algorithm is implementation-defined). Results therefore depend only on
// (seed, stream, index), not on platform or thread scheduling.

#include <array>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "starlike/analytic.hpp"
#include "starlike/config.hpp"

namespace starlike {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
      : engine_(splitmix64(seed ^ splitmix64(stream ^ splitmix64(index)))) {}

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform on {0, ..., n - 1}.
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }

 private:
  std::mt19937_64 engine_;
};

/// Rotation with a uniform phase times up to `max_factors` Blaschke factors,
/// moduli uniform in [0, max_modulus] and arguments uniform.
inline SchwarzMap random_schwarz_map(
    SampleStream& rng, std::size_t max_factors = sampling::max_blaschke_factors,
    double max_modulus = sampling::max_blaschke_modulus) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double phase = rng.uniform(0.0, two_pi);
  const std::size_t count = rng.below(max_factors + 1);
  std::vector<ComplexPoint> params;
  params.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double modulus = rng.uniform(0.0, max_modulus);
    params.push_back(std::polar(modulus, rng.uniform(0.0, two_pi)));
  }
  return SchwarzMap(phase, std::move(params));
}

inline SubordinateFactor random_factor(FactorKind kind, SampleStream& rng) {
  return {kind, random_schwarz_map(rng)};
}

inline ClassMember random_member(Family family, SampleStream& rng) {
  const FactorKind kind = factor_kind(family);
  std::array<SubordinateFactor, 3> factors{random_factor(kind, rng),
                                           random_factor(kind, rng),
                                           random_factor(kind, rng)};
  return ClassMember(family, std::move(factors));
}

}  // namespace starlike
