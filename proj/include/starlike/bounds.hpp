#pragma once

// Sharp radial bounds for |z p'/p| and |p|, their three-factor aggregates for
// class members, and the inverse of the aggregate bound.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "starlike/analytic.hpp"
#include "starlike/config.hpp"

namespace starlike {

inline constexpr double sqrt2_minus_1 = std::numbers::sqrt2 - 1.0;

struct ModulusRange {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x, double slack = 0.0) const noexcept {
    return x >= lo - slack && x <= hi + slack;
  }
};

namespace detail {

inline void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error("radius must lie in [0,1)");
  }
}

}  // namespace detail

/// r / (2(1-r)): bound on |z p'/p| for p subordinate to sqrt(1+z), |z| <= r.
inline double sqrt_factor_bound(double r) {
  detail::require_radius(r);
  return r / (2.0 * (1.0 - r));
}

/// Bound on |z p'/p| for p subordinate to e^z: r up to sqrt(2)-1, then
/// (1+r^2)^2 / (4(1-r^2)). Both branches meet at sqrt(2)-1.
inline double exp_factor_bound(double r) {
  detail::require_radius(r);
  if (r <= sqrt2_minus_1) return r;
  const double r2 = r * r;
  return (1.0 + r2) * (1.0 + r2) / (4.0 * (1.0 - r2));
}

inline ModulusRange factor_modulus_range(FactorKind kind, double r) {
  detail::require_radius(r);
  if (kind == FactorKind::SqrtOnePlus) {
    return {std::sqrt(1.0 - r), std::sqrt(1.0 + r)};
  }
  return {std::exp(-r), std::exp(r)};
}

/// r |-> sup |z f'/f - 1| over |z| <= r for the family: three times the factor
/// bound.
struct BoundProfile {
  Family family = Family::T1;

  double operator()(double r) const {
    return family == Family::T1 ? 3.0 * sqrt_factor_bound(r)
                                : 3.0 * exp_factor_bound(r);
  }
};

inline double member_bound(BoundProfile profile, double r) { return profile(r); }

inline ModulusRange member_growth_range(Family family, double r) {
  detail::require_radius(r);
  if (family == Family::T1) {
    return {r * std::pow(1.0 - r, 1.5), r * std::pow(1.0 + r, 1.5)};
  }
  return {r * std::exp(-3.0 * r), r * std::exp(3.0 * r)};
}

/// The unique r in (0,1) with member_bound(r) = delta.
///
/// T1 inverts in closed form. T2 is linear below 3(sqrt(2)-1); above that the
/// quartic branch is solved by bisection to `tol`.
inline double invert_member_bound(BoundProfile profile, double delta,
                                  double tol = default_tolerances.bisection) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::domain_error("bound value must be positive and finite");
  }
  if (profile.family == Family::T1) return 2.0 * delta / (3.0 + 2.0 * delta);

  if (delta <= 3.0 * sqrt2_minus_1) return delta / 3.0;
  double lo = sqrt2_minus_1;
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (profile(mid) < delta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace starlike
