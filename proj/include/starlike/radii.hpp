#pragma once

// Radii of starlikeness for T1 and T2: the closed forms, an independent numeric
// solver built from the bound inverse and the region inradius, and the
// extremal-function witnesses that show the closed forms are sharp.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "starlike/analytic.hpp"
#include "starlike/bounds.hpp"
#include "starlike/config.hpp"
#include "starlike/regions.hpp"

namespace starlike {

enum class Exactness { Exact, LowerBoundOnly };

constexpr std::string_view to_string(Exactness e) noexcept {
  return e == Exactness::Exact ? "exact" : "lower_bound_only";
}

struct RadiusQuery {
  Family family = Family::T1;
  Region region = HalfPlane{0.0};
};

namespace detail {

inline std::string format_param(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

/// "halfplane(alpha=0.25)", "janowski(A=1,B=-0.5)", "cardioid", ...
inline std::string region_label(const Region& region) {
  using detail::format_param;
  return std::visit(
      overloaded{[](HalfPlane h) { return "halfplane(alpha=" + format_param(h.alpha) + ")"; },
                 [](CenteredDisc d) { return "disc(alpha=" + format_param(d.alpha) + ")"; },
                 [](JanowskiDisc j) {
                   return "janowski(A=" + format_param(j.A) + ",B=" + format_param(j.B) + ")";
                 },
                 [&](const auto&) { return std::string(region_name(region)); }},
      region);
}

inline std::string describe(const RadiusQuery& query) {
  return "family=" + std::string(to_string(query.family)) +
         " region=" + region_label(query.region);
}

struct JanowskiRadius {
  double sufficient = 0.0;
  Exactness exactness = Exactness::Exact;
};

/// Radius of Janowski starlikeness S*[A,B]: T1 -> 2(A-B)/(3(1+|B|)+2(A-B)),
/// T2 -> (A-B)/(3(1+|B|)). Sharp (Exact) only for B < 0.
inline JanowskiRadius janowski_radius(Family family, double A, double B) {
  validate_janowski(A, B);
  const Exactness exactness = B < 0.0 ? Exactness::Exact : Exactness::LowerBoundOnly;
  if (B == -1.0) {
    // S*[A,-1] = S*((1-A)/2).
    const double alpha = (1.0 - A) / 2.0;
    const double r = family == Family::T1 ? 2.0 * (1.0 - alpha) / (5.0 - 2.0 * alpha)
                                          : (1.0 - alpha) / 3.0;
    return {r, exactness};
  }
  const double spread = A - B;
  const double scale = 1.0 + std::abs(B);
  if (family == Family::T1) return {2.0 * spread / (3.0 * scale + 2.0 * spread), exactness};
  return {spread / (3.0 * scale), exactness};
}

inline Exactness exactness(const RadiusQuery& query) {
  if (const auto* j = std::get_if<JanowskiDisc>(&query.region)) {
    return j->B < 0.0 ? Exactness::Exact : Exactness::LowerBoundOnly;
  }
  return Exactness::Exact;
}

/// The closed-form radius; nullopt when the region's parameters are outside the
/// admissible ranges.
inline std::optional<double> closed_form_radius(const RadiusQuery& query) {
  constexpr double e = std::numbers::e;
  constexpr double sqrt2 = std::numbers::sqrt2;
  const bool t1 = query.family == Family::T1;
  const double sin1 = std::sin(1.0);
  auto order_alpha = [&](double alpha) -> std::optional<double> {
    if (!valid_alpha(alpha)) return std::nullopt;
    return t1 ? 2.0 * (1.0 - alpha) / (5.0 - 2.0 * alpha) : (1.0 - alpha) / 3.0;
  };
  return std::visit(
      overloaded{
          [&](HalfPlane h) { return order_alpha(h.alpha); },
          [&](CenteredDisc d) { return order_alpha(d.alpha); },
          [&](JanowskiDisc j) -> std::optional<double> {
            if (!valid_janowski(j.A, j.B)) return std::nullopt;
            return janowski_radius(query.family, j.A, j.B).sufficient;
          },
          [&](Parabola) -> std::optional<double> { return t1 ? 1.0 / 4.0 : 1.0 / 6.0; },
          [&](ExpRegion) -> std::optional<double> {
            return t1 ? (2.0 * e - 2.0) / (5.0 * e - 2.0) : (e - 1.0) / (3.0 * e);
          },
          [&](Cardioid) -> std::optional<double> { return t1 ? 4.0 / 13.0 : 2.0 / 9.0; },
          [&](SineRegion) -> std::optional<double> {
            return t1 ? 2.0 * sin1 / (3.0 + 2.0 * sin1) : sin1 / 3.0;
          },
          [&](Lune) -> std::optional<double> {
            return t1 ? (4.0 - 2.0 * sqrt2) / (7.0 - 2.0 * sqrt2) : (2.0 - sqrt2) / 3.0;
          },
          [&](RationalRegion) -> std::optional<double> {
            return t1 ? (6.0 - 4.0 * sqrt2) / (9.0 - 4.0 * sqrt2)
                      : (3.0 - 2.0 * sqrt2) / 3.0;
          },
          [&](Nephroid) -> std::optional<double> { return t1 ? 4.0 / 13.0 : 2.0 / 9.0; },
          [&](Sigmoid) -> std::optional<double> {
            return t1 ? (2.0 * e - 2.0) / (5.0 * e + 1.0) : (e - 1.0) / (3.0 * (1.0 + e));
          }},
      query.region);
}

inline std::string closed_form_expression(const RadiusQuery& query) {
  const bool t1 = query.family == Family::T1;
  return std::visit(
      overloaded{
          [&](HalfPlane) -> std::string { return t1 ? "2(1-alpha)/(5-2alpha)" : "(1-alpha)/3"; },
          [&](CenteredDisc) -> std::string { return t1 ? "2(1-alpha)/(5-2alpha)" : "(1-alpha)/3"; },
          [&](JanowskiDisc j) -> std::string {
            if (j.B < 0.0) return t1 ? "2(A-B)/(3+2A-5B)" : "(A-B)/(3(1-B))";
            return t1 ? "2(A-B)/(3(1+|B|)+2(A-B))" : "(A-B)/(3(1+|B|))";
          },
          [&](Parabola) -> std::string { return t1 ? "1/4" : "1/6"; },
          [&](ExpRegion) -> std::string { return t1 ? "(2e-2)/(5e-2)" : "(e-1)/(3e)"; },
          [&](Cardioid) -> std::string { return t1 ? "4/13" : "2/9"; },
          [&](SineRegion) -> std::string { return t1 ? "2sin(1)/(3+2sin(1))" : "sin(1)/3"; },
          [&](Lune) -> std::string {
            return t1 ? "(4-2sqrt(2))/(7-2sqrt(2))" : "(2-sqrt(2))/3";
          },
          [&](RationalRegion) -> std::string {
            return t1 ? "(6-4sqrt(2))/(9-4sqrt(2))" : "(3-2sqrt(2))/3";
          },
          [&](Nephroid) -> std::string { return t1 ? "4/13" : "2/9"; },
          [&](Sigmoid) -> std::string { return t1 ? "(2e-2)/(5e+1)" : "(e-1)/(3(1+e))"; }},
      query.region);
}

namespace detail {

// Largest r in [0, 1) with pred(r) true, assuming pred is true at 0 and
// switches to false exactly once.
template <class Predicate>
double bisect_last_true(Predicate&& pred, double tol) {
  double lo = 0.0;
  double hi = 1.0 - 1e-9;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

}  // namespace detail

/// Numeric radius: solves member_bound(r) = inradius about 1. Janowski discs are
/// bisected against the Silverman disc-in-disc criterion instead.
inline double numeric_radius(const RadiusQuery& query,
                             double tol = default_tolerances.round_trip) {
  detail::require_tolerance(tol);
  const BoundProfile profile{query.family};
  if (const auto* j = std::get_if<JanowskiDisc>(&query.region); j && j->B != -1.0) {
    validate_janowski(j->A, j->B);
    const auto circle = detail::janowski_circle(*j);
    return detail::bisect_last_true(
        [&](double r) {
          return disc_in_disc({1.0, 0.0}, member_bound(profile, r), circle.center,
                              circle.radius);
        },
        tol);
  }
  return invert_member_bound(profile, inradius_about_one(query.region),
                             std::min(tol, default_tolerances.bisection));
}

/// Second, slower oracle: bisection on disc_in_region(region, 1, bound(r)).
inline double bisection_radius(const RadiusQuery& query,
                               double tol = default_tolerances.round_trip) {
  detail::require_tolerance(tol);
  const BoundProfile profile{query.family};
  return detail::bisect_last_true(
      [&](double r) {
        return disc_in_region(query.region, {1.0, 0.0}, member_bound(profile, r));
      },
      tol);
}

struct WitnessPoint {
  ComplexPoint z;
  ComplexPoint value;
  double boundary_residual = 0.0;
};

/// z f'/f of the extremal member at -R (and +R for T2 in the sine region),
/// with its distance to the region boundary.
struct SharpnessWitness {
  std::vector<WitnessPoint> points;

  const WitnessPoint& primary() const { return points.front(); }

  double boundary_residual() const {
    double worst = 0.0;
    for (const auto& p : points) worst = std::max(worst, p.boundary_residual);
    return worst;
  }
};

inline SharpnessWitness sharpness_witness(const RadiusQuery& query) {
  if (exactness(query) != Exactness::Exact) {
    throw std::invalid_argument("no sharpness witness for a lower-bound-only radius");
  }
  const auto radius = closed_form_radius(query);
  if (!radius) throw std::invalid_argument("query parameters are outside the catalog");

  const ClassMember extremal = extremal_member(query.family);
  auto witness_at = [&](double x) {
    const ComplexPoint z{x, 0.0};
    const ComplexPoint value = log_derivative_member(extremal, z);
    return WitnessPoint{z, value, distance_to_boundary(query.region, value)};
  };

  SharpnessWitness witness;
  witness.points.push_back(witness_at(-*radius));
  if (query.family == Family::T2 && std::holds_alternative<SineRegion>(query.region)) {
    witness.points.push_back(witness_at(*radius));
  }
  return witness;
}

/// The zero of the extremal member's derivative on (-1, 0): -2/5 for T1 and
/// -1/3 for T2. Since f(z)/z does not vanish, f' vanishes exactly where
/// z f'/f does.
inline ComplexPoint univalence_witness(Family family) {
  const ClassMember extremal = extremal_member(family);
  auto g = [&](double x) { return log_derivative_member(extremal, {x, 0.0}).real(); };
  double lo = -0.999;
  double hi = 0.0;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return {std::abs(g(lo)) < std::abs(g(hi)) ? lo : hi, 0.0};
}

struct RadiusReport {
  RadiusQuery query;
  std::optional<double> closed_form;
  std::string closed_form_expr;
  double numeric = 0.0;
  std::optional<SharpnessWitness> witness;
  Exactness exactness = Exactness::Exact;

  double radius_residual() const {
    return closed_form ? std::abs(*closed_form - numeric) : 0.0;
  }
};

inline RadiusReport radius_report(const RadiusQuery& query,
                                  double tol = default_tolerances.round_trip) {
  RadiusReport report;
  report.query = query;
  report.closed_form = closed_form_radius(query);
  report.closed_form_expr = closed_form_expression(query);
  report.numeric = numeric_radius(query, tol);
  report.exactness = exactness(query);
  if (report.exactness == Exactness::Exact && report.closed_form) {
    report.witness = sharpness_witness(query);
  }
  return report;
}

}  // namespace starlike
