#pragma once

// Target domains for z f'/f: half-planes, discs, Janowski discs and the images
// of the unit disc under the superordinate maps of the named starlike classes.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "starlike/analytic.hpp"
#include "starlike/config.hpp"

namespace starlike {

/// {Re w > alpha}
struct HalfPlane {
  double alpha = 0.0;
};
/// {|w - 1| < 1 - alpha}
struct CenteredDisc {
  double alpha = 0.0;
};
/// Image of the disc under (1 + Az)/(1 + Bz).
struct JanowskiDisc {
  double A = 1.0;
  double B = -1.0;
};
/// {Re w > |w - 1|}
struct Parabola {};
/// {|log w| < 1}, the image of e^z.
struct ExpRegion {};
/// Inside the cardioid traced by 1 + 4z/3 + 2z^2/3.
struct Cardioid {};
/// Image of 1 + sin z.
struct SineRegion {};
/// {|w^2 - 1| < 2|w|, Re w > 0}, the image of z + sqrt(1 + z^2). The
/// inequality alone also admits the mirror lune in the left half-plane.
struct Lune {};
/// Image of 1 + (kz + z^2)/(k^2 - kz), k = sqrt(2) + 1.
struct RationalRegion {};
/// Inside the nephroid traced by 1 + z - z^3/3.
struct Nephroid {};
/// {|log(w/(2 - w))| < 1}, the image of 2/(1 + e^{-z}).
struct Sigmoid {};

using Region =
    std::variant<HalfPlane, CenteredDisc, JanowskiDisc, Parabola, ExpRegion,
                 Cardioid, SineRegion, Lune, RationalRegion, Nephroid, Sigmoid>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline bool valid_alpha(double alpha) noexcept {
  return alpha >= 0.0 && alpha < 1.0;
}

inline bool valid_janowski(double A, double B) noexcept {
  return B >= -1.0 && B < A && A <= 1.0;
}

inline void validate_alpha(double alpha) {
  if (!valid_alpha(alpha)) throw std::invalid_argument("alpha must lie in [0,1)");
}

inline void validate_janowski(double A, double B) {
  if (!valid_janowski(A, B)) {
    throw std::invalid_argument("A and B must satisfy -1 <= B < A <= 1");
  }
}

inline Region half_plane(double alpha) {
  validate_alpha(alpha);
  return HalfPlane{alpha};
}

inline Region centered_disc(double alpha) {
  validate_alpha(alpha);
  return CenteredDisc{alpha};
}

inline Region janowski_disc(double A, double B) {
  validate_janowski(A, B);
  return JanowskiDisc{A, B};
}

inline std::string_view region_name(const Region& region) {
  return std::visit(
      overloaded{[](HalfPlane) { return std::string_view{"halfplane"}; },
                 [](CenteredDisc) { return std::string_view{"disc"}; },
                 [](JanowskiDisc) { return std::string_view{"janowski"}; },
                 [](Parabola) { return std::string_view{"parabola"}; },
                 [](ExpRegion) { return std::string_view{"exp"}; },
                 [](Cardioid) { return std::string_view{"cardioid"}; },
                 [](SineRegion) { return std::string_view{"sine"}; },
                 [](Lune) { return std::string_view{"lune"}; },
                 [](RationalRegion) { return std::string_view{"rational"}; },
                 [](Nephroid) { return std::string_view{"nephroid"}; },
                 [](Sigmoid) { return std::string_view{"sigmoid"}; }},
      region);
}

/// The eight regions defined by a fixed superordinate map, in catalog order.
inline std::vector<Region> named_regions() {
  return {Parabola{}, ExpRegion{}, Cardioid{}, SineRegion{},
          Lune{},     RationalRegion{}, Nephroid{}, Sigmoid{}};
}

/// Parameter-free region by its lowercase token; nullopt for unknown names and
/// for the parameterized regions.
inline std::optional<Region> named_region(std::string_view name) {
  for (const auto& region : named_regions()) {
    if (region_name(region) == name) return region;
  }
  return std::nullopt;
}

namespace detail {

inline constexpr double rational_k = std::numbers::sqrt2 + 1.0;

struct JanowskiCircle {
  ComplexPoint center;
  double radius;
};

// Only meaningful for B > -1.
inline JanowskiCircle janowski_circle(const JanowskiDisc& j) {
  const double denom = 1.0 - j.B * j.B;
  return {{(1.0 - j.A * j.B) / denom, 0.0}, (j.A - j.B) / denom};
}

inline double cardioid_polynomial(ComplexPoint w) {
  const double u = w.real();
  const double v = w.imag();
  const double s = 9.0 * u * u + 9.0 * v * v;
  const double outer = s - 18.0 * u + 5.0;
  return outer * outer - 16.0 * (s - 6.0 * u + 1.0);
}

inline double nephroid_polynomial(ComplexPoint w) {
  const double u = w.real() - 1.0;
  const double v = w.imag();
  const double t = u * u + v * v - 4.0 / 9.0;
  return t * t * t - 4.0 * v * v / 3.0;
}

// Principal log, but only off the closed negative real axis.
inline std::optional<ComplexPoint> slit_log(ComplexPoint w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return std::nullopt;
  if (w.imag() == 0.0 && w.real() <= 0.0) return std::nullopt;
  return std::log(w);
}

// phi(e^{i theta}) for the map-defined regions and the circle parametrization
// for discs. May be non-finite (parabola pole at theta = 0). Returns nullopt for
// regions without a bounded parametrization.
inline std::optional<ComplexPoint> curve_point(const Region& region,
                                               double theta) {
  const ComplexPoint z = std::polar(1.0, theta);
  return std::visit(
      overloaded{
          [](HalfPlane) -> std::optional<ComplexPoint> { return std::nullopt; },
          [&](CenteredDisc d) -> std::optional<ComplexPoint> {
            return 1.0 + (1.0 - d.alpha) * z;
          },
          [&](JanowskiDisc j) -> std::optional<ComplexPoint> {
            if (j.B == -1.0) return std::nullopt;
            const auto circle = janowski_circle(j);
            return circle.center + circle.radius * z;
          },
          [&](Parabola) -> std::optional<ComplexPoint> {
            // sqrt(z) taken with Im >= 0, i.e. e^{i theta / 2} for theta in
            // [0, 2 pi).
            constexpr double two_pi = 2.0 * std::numbers::pi;
            double t = std::fmod(theta, two_pi);
            if (t < 0.0) t += two_pi;
            const ComplexPoint s = std::polar(1.0, 0.5 * t);
            const ComplexPoint l = std::log((1.0 + s) / (1.0 - s));
            return 1.0 + (2.0 / (std::numbers::pi * std::numbers::pi)) * l * l;
          },
          [&](ExpRegion) -> std::optional<ComplexPoint> { return std::exp(z); },
          [&](Cardioid) -> std::optional<ComplexPoint> {
            return 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0;
          },
          [&](SineRegion) -> std::optional<ComplexPoint> {
            return 1.0 + std::sin(z);
          },
          [&](Lune) -> std::optional<ComplexPoint> {
            return z + std::sqrt(1.0 + z * z);
          },
          [&](RationalRegion) -> std::optional<ComplexPoint> {
            constexpr double k = rational_k;
            return 1.0 + (k * z + z * z) / (k * k - k * z);
          },
          [&](Nephroid) -> std::optional<ComplexPoint> {
            return 1.0 + z - z * z * z / 3.0;
          },
          [&](Sigmoid) -> std::optional<ComplexPoint> {
            return 2.0 / (1.0 + std::exp(-z));
          }},
      region);
}

inline bool is_finite(ComplexPoint w) {
  return std::isfinite(w.real()) && std::isfinite(w.imag());
}

}  // namespace detail

/// Whether the boundary is a closed curve parametrized over [0, 2 pi).
inline bool has_boundary_curve(const Region& region) {
  return detail::curve_point(region, std::numbers::pi).has_value();
}

/// phi(e^{i theta}) for map-defined regions, the boundary circle for discs.
/// Counterclockwise in theta.
inline ComplexPoint boundary_point(const Region& region, double theta) {
  if (!std::isfinite(theta)) throw std::domain_error("theta must be finite");
  const auto point = detail::curve_point(region, theta);
  if (!point) {
    throw std::domain_error("region '" + std::string(region_name(region)) +
                            "' has no bounded boundary parametrization");
  }
  if (!detail::is_finite(*point)) {
    throw std::domain_error("boundary parametrization is singular at theta");
  }
  return *point;
}

/// Closest point of the boundary curve to `target`.
struct NearestBoundary {
  double distance = std::numeric_limits<double>::infinity();
  double theta = 0.0;
  ComplexPoint point{};
};

/// Minimizes |boundary(theta) - target| over a uniform grid and golden-section
/// refines the smallest local minima. Requires has_boundary_curve(region).
inline NearestBoundary nearest_boundary(const Region& region,
                                        ComplexPoint target) {
  if (!has_boundary_curve(region)) {
    throw std::domain_error("region '" + std::string(region_name(region)) +
                            "' has no bounded boundary parametrization");
  }
  constexpr std::size_t n = boundary_grid::samples;
  constexpr double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  constexpr double inf = std::numeric_limits<double>::infinity();

  auto squared_distance = [&](double theta) {
    const ComplexPoint p = *detail::curve_point(region, theta);
    if (!detail::is_finite(p)) return inf;
    const double d = std::norm(p - target);
    return std::isfinite(d) ? d : inf;
  };

  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = squared_distance(step * static_cast<double>(i));
  }

  std::vector<std::size_t> minima;
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = grid[(i + n - 1) % n];
    const double next = grid[(i + 1) % n];
    if (std::isfinite(grid[i]) && grid[i] <= prev && grid[i] <= next) {
      minima.push_back(i);
    }
  }
  std::stable_sort(minima.begin(), minima.end(), [&](std::size_t a, std::size_t b) {
    return grid[a] < grid[b];
  });
  if (minima.size() > boundary_grid::refined_minima) {
    minima.resize(boundary_grid::refined_minima);
  }

  NearestBoundary best;
  double best_squared = inf;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (const std::size_t i : minima) {
    double lo = step * (static_cast<double>(i) - 1.0);
    double hi = step * (static_cast<double>(i) + 1.0);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = squared_distance(x1);
    double f2 = squared_distance(x2);
    while (hi - lo > boundary_grid::refine_bracket) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = squared_distance(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = squared_distance(x2);
      }
    }
    // The grid point itself may beat the refined interior (plateaus, cusps).
    const double candidates[] = {step * static_cast<double>(i), x1, x2};
    for (const double theta : candidates) {
      const double d = squared_distance(theta);
      if (d < best_squared) {
        best_squared = d;
        best.theta = theta;
      }
    }
  }
  best.distance = std::sqrt(best_squared);
  best.point = *detail::curve_point(region, best.theta);
  return best;
}

/// Winding number of the boundary curve about w. Segments are bisected until
/// each subtends a small angle at w, so points very close to the curve are
/// resolved. Returns nullopt when w lies on a sampled curve point.
inline std::optional<int> winding_number(const Region& region, ComplexPoint w) {
  if (!has_boundary_curve(region)) {
    throw std::domain_error("region '" + std::string(region_name(region)) +
                            "' has no bounded boundary parametrization");
  }
  constexpr std::size_t n = boundary_grid::samples;
  constexpr double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  bool degenerate = false;

  auto offset = [&](double theta) { return *detail::curve_point(region, theta) - w; };

  auto sweep = [&](auto&& self, double ta, double tb, ComplexPoint pa,
                   ComplexPoint pb, int depth) -> double {
    const double ra = std::abs(pa);
    const double rb = std::abs(pb);
    if (ra == 0.0 || rb == 0.0 || !std::isfinite(ra) || !std::isfinite(rb)) {
      degenerate = true;
      return 0.0;
    }
    if (depth < boundary_grid::max_winding_depth &&
        std::abs(pb - pa) > 0.25 * std::min(ra, rb)) {
      const double tm = 0.5 * (ta + tb);
      const ComplexPoint pm = offset(tm);
      return self(self, ta, tm, pa, pm, depth + 1) +
             self(self, tm, tb, pm, pb, depth + 1);
    }
    return std::arg(pb / pa);
  };

  const ComplexPoint start = offset(0.0);
  ComplexPoint prev = start;
  double total = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double ta = step * static_cast<double>(i - 1);
    const double tb = step * static_cast<double>(i);
    const ComplexPoint next = i == n ? start : offset(tb);
    total += sweep(sweep, ta, tb, prev, next, 0);
    if (degenerate) return std::nullopt;
    prev = next;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

/// Open-region membership with an exclusion band: points within `band` of the
/// boundary (measured on the defining function) are not members.
inline bool contains(const Region& region, ComplexPoint w,
                     double band = default_tolerances.exclusion_band) {
  if (!detail::is_finite(w)) return false;
  return std::visit(
      overloaded{
          [&](HalfPlane h) { return w.real() - h.alpha > band; },
          [&](CenteredDisc d) {
            return (1.0 - d.alpha) - std::abs(w - 1.0) > band;
          },
          [&](JanowskiDisc j) {
            if (j.B == -1.0) return w.real() - (1.0 - j.A) / 2.0 > band;
            const auto circle = detail::janowski_circle(j);
            return circle.radius - std::abs(w - circle.center) > band;
          },
          [&](Parabola) { return w.real() - std::abs(w - 1.0) > band; },
          [&](ExpRegion) {
            const auto l = detail::slit_log(w);
            return l.has_value() && 1.0 - std::abs(*l) > band;
          },
          [&](Cardioid) { return -detail::cardioid_polynomial(w) > band; },
          [&](SineRegion) {
            const auto winding = winding_number(region, w);
            return winding == 1 && nearest_boundary(region, w).distance > band;
          },
          [&](Lune) {
            return w.real() > 0.0 && 2.0 * std::abs(w) - std::abs(w * w - 1.0) > band;
          },
          [&](RationalRegion) {
            const auto winding = winding_number(region, w);
            return winding == 1 && nearest_boundary(region, w).distance > band;
          },
          [&](Nephroid) { return -detail::nephroid_polynomial(w) > band; },
          [&](Sigmoid) {
            if (w == ComplexPoint{2.0, 0.0}) return false;
            const auto l = detail::slit_log(w / (2.0 - w));
            return l.has_value() && 1.0 - std::abs(*l) > band;
          }},
      region);
}

/// Distance from w to the boundary: analytic for half-planes and discs, curve
/// minimization otherwise.
inline double distance_to_boundary(const Region& region, ComplexPoint w) {
  return std::visit(
      overloaded{
          [&](HalfPlane h) { return std::abs(w.real() - h.alpha); },
          [&](CenteredDisc d) {
            return std::abs(std::abs(w - 1.0) - (1.0 - d.alpha));
          },
          [&](JanowskiDisc j) {
            if (j.B == -1.0) return std::abs(w.real() - (1.0 - j.A) / 2.0);
            const auto circle = detail::janowski_circle(j);
            return std::abs(std::abs(w - circle.center) - circle.radius);
          },
          [&](const auto&) { return nearest_boundary(region, w).distance; }},
      region);
}

/// Radius of the largest disc about 1 inside the region.
inline double inradius_about_one(const Region& region) {
  return std::visit(
      overloaded{
          [](HalfPlane h) { return 1.0 - h.alpha; },
          [](CenteredDisc d) { return 1.0 - d.alpha; },
          [](JanowskiDisc j) {
            if (j.B == -1.0) return (1.0 + j.A) / 2.0;
            const auto circle = detail::janowski_circle(j);
            return circle.radius - std::abs(circle.center - 1.0);
          },
          [&](const auto&) {
            return nearest_boundary(region, ComplexPoint{1.0, 0.0}).distance;
          }},
      region);
}

/// Closed-form inradius about 1 from the classical disc-inclusion lemmas.
inline std::optional<double> known_inradius_about_one(const Region& region) {
  constexpr double e = std::numbers::e;
  constexpr double sqrt2 = std::numbers::sqrt2;
  return std::visit(
      overloaded{
          [](HalfPlane h) -> std::optional<double> { return 1.0 - h.alpha; },
          [](CenteredDisc d) -> std::optional<double> { return 1.0 - d.alpha; },
          [](JanowskiDisc j) -> std::optional<double> {
            return (j.A - j.B) / (1.0 + std::abs(j.B));
          },
          [](Parabola) -> std::optional<double> { return 0.5; },
          [](ExpRegion) -> std::optional<double> { return 1.0 - 1.0 / e; },
          [](Cardioid) -> std::optional<double> { return 2.0 / 3.0; },
          [](SineRegion) -> std::optional<double> { return std::sin(1.0); },
          [](Lune) -> std::optional<double> { return 2.0 - sqrt2; },
          [](RationalRegion) -> std::optional<double> { return 3.0 - 2.0 * sqrt2; },
          [](Nephroid) -> std::optional<double> { return 2.0 / 3.0; },
          [](Sigmoid) -> std::optional<double> { return (e - 1.0) / (e + 1.0); }},
      region);
}

/// Silverman: {|w - c| < d} is inside {|w - a| < b} iff |a - c| <= b - d.
inline bool disc_in_disc(ComplexPoint c, double d, ComplexPoint a, double b) {
  if (d < 0.0 || b < 0.0) {
    throw std::invalid_argument("disc radii must be non-negative");
  }
  return std::abs(a - c) <= b - d;
}

/// Whether the closed disc {|w - center| <= rho} lies in the region. Touching
/// the boundary counts as leaving it; curve-based regions also apply `band`.
inline bool disc_in_region(const Region& region, ComplexPoint center, double rho,
                           double band = default_tolerances.exclusion_band) {
  if (!(rho >= 0.0)) throw std::invalid_argument("disc radius must be non-negative");
  if (!contains(region, center, 0.0)) {
    throw std::invalid_argument("disc center must lie in the region");
  }
  return std::visit(
      overloaded{
          [&](HalfPlane h) { return rho < center.real() - h.alpha; },
          [&](CenteredDisc d) {
            return rho < (1.0 - d.alpha) - std::abs(center - 1.0);
          },
          [&](JanowskiDisc j) {
            if (j.B == -1.0) return rho < center.real() - (1.0 - j.A) / 2.0;
            const auto circle = detail::janowski_circle(j);
            return rho < circle.radius - std::abs(center - circle.center);
          },
          [&](const auto&) {
            return rho < nearest_boundary(region, center).distance - band;
          }},
      region);
}

}  // namespace starlike
