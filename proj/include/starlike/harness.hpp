#pragma once

// Verification suites over the radius catalog and the lemma inequalities, and
// the reproduction table of every catalog radius.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "starlike/analytic.hpp"
#include "starlike/bounds.hpp"
#include "starlike/config.hpp"
#include "starlike/radii.hpp"
#include "starlike/random.hpp"
#include "starlike/regions.hpp"

namespace starlike {

struct VerificationConfig {
  std::uint64_t seed = 42;
  std::size_t samples_per_family = sampling::samples_per_family;
  std::size_t boundary_samples = sampling::boundary_samples;
  double radius_tol = default_tolerances.radius;
  double residual_tol = default_tolerances.residual;
  double dominance_slack = default_tolerances.dominance_slack;
  // 0 selects STARLIKE_RADIUS_THREADS or the hardware concurrency. Never
  // affects results.
  unsigned threads = 0;

  void validate() const {
    if (samples_per_family < 1 || boundary_samples < 1) {
      throw std::invalid_argument("sample counts must be at least 1");
    }
    if (!(radius_tol > 0.0) || !(residual_tol > 0.0) || !(dominance_slack > 0.0)) {
      throw std::invalid_argument("tolerances must be positive");
    }
  }
};

/// A concrete check: what was evaluated, what was expected, what came out.
struct Witness {
  std::string input;
  std::string expected;
  std::string got;
  double residual = 0.0;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  double worst_residual = 0.0;
  Witness witness;
  std::size_t checks = 0;
  std::vector<std::string> diagnostics;
};

struct VerificationReport {
  std::vector<SuiteResult> suites;

  bool overall() const {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteResult& s) { return s.pass; });
  }

  void append(const VerificationReport& other) {
    suites.insert(suites.end(), other.suites.begin(), other.suites.end());
  }
};

namespace detail {

inline std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string fmt(ComplexPoint z) {
  return fmt(z.real()) + (z.imag() < 0.0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

// Keeps the record whose residual exceeds its limit by the most; ties keep the
// earliest, so chunked merges in index order match a sequential scan.
class Tracker {
 public:
  void record(double residual, double limit, std::string_view input,
              const std::string& expected, const std::string& got) {
    record(residual, limit, [&] {
      return Witness{std::string(input), expected, got, residual};
    });
  }

  // `make` builds the witness only when this record becomes the worst one.
  template <class MakeWitness>
  void record(double residual, double limit, MakeWitness&& make) {
    ++checks_;
    const bool ok = residual <= limit;  // NaN fails
    pass_ = pass_ && ok;
    const double excess = std::isnan(residual) ? std::numeric_limits<double>::infinity()
                                               : residual - limit;
    if (!has_witness_ || excess > worst_excess_) {
      has_witness_ = true;
      worst_excess_ = excess;
      witness_ = make();
      witness_.residual = residual;
    }
  }

  void merge(const Tracker& other) {
    checks_ += other.checks_;
    pass_ = pass_ && other.pass_;
    if (other.has_witness_ && (!has_witness_ || other.worst_excess_ > worst_excess_)) {
      has_witness_ = true;
      worst_excess_ = other.worst_excess_;
      witness_ = other.witness_;
    }
  }

  SuiteResult finish(std::string name, std::vector<std::string> diagnostics = {}) const {
    SuiteResult result;
    result.name = std::move(name);
    result.pass = pass_ && has_witness_;
    result.worst_residual = witness_.residual;
    result.witness = witness_;
    result.checks = checks_;
    result.diagnostics = std::move(diagnostics);
    return result;
  }

 private:
  bool pass_ = true;
  bool has_witness_ = false;
  double worst_excess_ = -std::numeric_limits<double>::infinity();
  Witness witness_;
  std::size_t checks_ = 0;
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STARLIKE_RADIUS_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i, tracker) for i in [0, n) over contiguous chunks and merges the
// per-chunk trackers in chunk order.
template <class Body>
Tracker parallel_track(std::size_t n, unsigned threads, Body&& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  std::vector<Tracker> partial(workers);
  auto run_chunk = [&](std::size_t w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) body(i, partial[w]);
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
  }
  Tracker merged;
  for (const auto& t : partial) merged.merge(t);
  return merged;
}

// Sample streams, one per suite.
enum : std::uint64_t {
  stream_sqrt_factors = 1,
  stream_exp_factors = 2,
  stream_t1_members = 3,
  stream_t2_members = 4,
};

inline ComplexPoint sample_point(double r, std::size_t k, std::size_t count, double offset) {
  const double theta =
      offset + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
  return std::polar(r, theta);
}

}  // namespace detail

inline constexpr std::array<double, 4> oracle_alphas{0.0, 0.25, 0.5, 0.75};

/// The ten region kinds used for the reproduction table: the half-plane and
/// disc at alpha = 0 followed by the eight named regions.
inline std::vector<Region> table_regions() {
  std::vector<Region> regions{HalfPlane{0.0}, CenteredDisc{0.0}};
  for (const auto& region : named_regions()) regions.push_back(region);
  return regions;
}

/// Queries checked for oracle agreement: half-plane and disc over the alpha
/// grid plus the eight named regions, for both families.
inline std::vector<RadiusQuery> oracle_queries() {
  std::vector<RadiusQuery> queries;
  for (const Family family : {Family::T1, Family::T2}) {
    for (const double alpha : oracle_alphas) queries.push_back({family, HalfPlane{alpha}});
    for (const double alpha : oracle_alphas) queries.push_back({family, CenteredDisc{alpha}});
    for (const auto& region : named_regions()) queries.push_back({family, region});
  }
  return queries;
}

namespace detail {

inline SuiteResult suite_inradius_catalog(const VerificationConfig& config) {
  Tracker tracker;
  std::vector<std::string> diagnostics;
  for (const auto& region : named_regions()) {
    const auto nearest = nearest_boundary(region, {1.0, 0.0});
    const double known = *known_inradius_about_one(region);
    tracker.record(std::abs(nearest.distance - known), config.radius_tol,
                   "region=" + std::string(region_name(region)), fmt(known),
                   fmt(nearest.distance));
    if (std::abs(nearest.point.imag()) > 1e-9) {
      diagnostics.push_back("region=" + std::string(region_name(region)) +
                            ": nearest boundary point to 1 is off the real axis at " +
                            fmt(nearest.point));
    }
  }
  return tracker.finish("regions.inradius_catalog", std::move(diagnostics));
}

inline SuiteResult suite_oracle_agreement(const VerificationConfig& config) {
  Tracker tracker;
  for (const auto& query : oracle_queries()) {
    const double closed = *closed_form_radius(query);
    const double numeric = numeric_radius(query);
    const double bisected = bisection_radius(query);
    tracker.record(std::abs(numeric - closed), config.radius_tol,
                   describe(query) + " path=numeric", fmt(closed), fmt(numeric));
    tracker.record(std::abs(bisected - closed), config.radius_tol,
                   describe(query) + " path=bisection", fmt(closed), fmt(bisected));
  }
  return tracker.finish("radii.oracle_agreement");
}

inline SuiteResult suite_sharpness(const VerificationConfig& config) {
  Tracker tracker;
  for (const auto& query : oracle_queries()) {
    const auto witness = sharpness_witness(query);
    for (const auto& point : witness.points) {
      tracker.record(point.boundary_residual, config.residual_tol,
                     describe(query) + " z=" + fmt(point.z), "on boundary",
                     "zf'/f=" + fmt(point.value));
    }
  }
  // The lune witness satisfies |w^2 - 1| = 2|w| with common value 0.828.
  for (const Family family : {Family::T1, Family::T2}) {
    const RadiusQuery query{family, Lune{}};
    const ComplexPoint w = sharpness_witness(query).primary().value;
    const double lhs = std::abs(w * w - 1.0);
    const double rhs = 2.0 * std::abs(w);
    tracker.record(std::abs(lhs - rhs), config.residual_tol,
                   describe(query) + " |w^2-1| vs 2|w|", fmt(rhs), fmt(lhs));
    tracker.record(std::abs(rhs - 0.828), 5e-4, describe(query) + " common value",
                   "0.828", fmt(rhs));
  }
  return tracker.finish("radii.sharpness");
}

inline SuiteResult suite_alpha_monotonicity(const VerificationConfig&) {
  Tracker tracker;
  for (const Family family : {Family::T1, Family::T2}) {
    double previous = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100; ++i) {
      const double alpha = i / 100.0;
      const double r = *closed_form_radius({family, HalfPlane{alpha}});
      // Positive residual when the sequence fails to decrease.
      tracker.record(r - previous, 0.0,
                     "family=" + std::string(to_string(family)) + " alpha=" + fmt(alpha),
                     "< " + fmt(previous), fmt(r));
      previous = r;
    }
    const double near_one = *closed_form_radius({family, HalfPlane{1.0 - 1e-12}});
    tracker.record(near_one, 1e-11,
                   "family=" + std::string(to_string(family)) + " alpha=1-1e-12", "-> 0",
                   fmt(near_one));
  }
  return tracker.finish("radii.alpha_monotonicity");
}

inline SuiteResult suite_halfplane_disc(const VerificationConfig&) {
  Tracker tracker;
  for (const Family family : {Family::T1, Family::T2}) {
    for (int i = 0; i < 20; ++i) {
      const double alpha = i / 20.0;
      const double hp = numeric_radius({family, HalfPlane{alpha}});
      const double disc = numeric_radius({family, CenteredDisc{alpha}});
      tracker.record(std::abs(hp - disc), 1e-10,
                     "family=" + std::string(to_string(family)) + " alpha=" + fmt(alpha),
                     fmt(hp), fmt(disc));
    }
  }
  return tracker.finish("radii.halfplane_disc_coincidence");
}

inline SuiteResult suite_parabola(const VerificationConfig& config) {
  Tracker tracker;
  for (const Family family : {Family::T1, Family::T2}) {
    const double parabola = numeric_radius({family, Parabola{}});
    const double order_half = numeric_radius({family, HalfPlane{0.5}});
    const double expected = family == Family::T1 ? 0.25 : 1.0 / 6.0;
    const std::string tag = "family=" + std::string(to_string(family));
    tracker.record(std::abs(parabola - order_half), config.radius_tol,
                   tag + " parabola vs halfplane(1/2)", fmt(order_half), fmt(parabola));
    tracker.record(std::abs(parabola - expected), config.radius_tol, tag + " parabola",
                   fmt(expected), fmt(parabola));
  }
  return tracker.finish("radii.parabola_order_half");
}

inline constexpr std::array<double, 5> janowski_grid_A{0.0, 0.25, 0.5, 0.75, 1.0};
inline constexpr std::array<double, 5> janowski_grid_B{-0.9, -0.7, -0.5, -0.3, -0.1};

inline SuiteResult suite_janowski(const VerificationConfig& config) {
  Tracker tracker;
  for (const Family family : {Family::T1, Family::T2}) {
    const BoundProfile profile{family};
    const std::string tag = "family=" + std::string(to_string(family));
    for (const double A : janowski_grid_A) {
      for (const double B : janowski_grid_B) {
        const std::string input = tag + " A=" + fmt(A) + " B=" + fmt(B);
        const auto radius = janowski_radius(family, A, B);
        const double formula = family == Family::T1 ? 2.0 * (A - B) / (3.0 + 2.0 * A - 5.0 * B)
                                                    : (A - B) / (3.0 * (1.0 - B));
        tracker.record(std::abs(radius.sufficient - formula), 1e-12, input + " formula",
                       fmt(formula), fmt(radius.sufficient));
        tracker.record(radius.exactness == Exactness::Exact ? 0.0 : 1.0, 0.0,
                       input + " exactness", "exact",
                       std::string(to_string(radius.exactness)));

        const RadiusQuery query{family, JanowskiDisc{A, B}};
        const double bisected = numeric_radius(query);
        tracker.record(std::abs(bisected - radius.sufficient), config.radius_tol,
                       input + " silverman bisection", fmt(radius.sufficient), fmt(bisected));

        // c = 1, d = bound(R), a and b from the Janowski circle: |a-c| = b-d.
        const double a = (1.0 - A * B) / (1.0 - B * B);
        const double b = (A - B) / (1.0 - B * B);
        const double d = member_bound(profile, radius.sufficient);
        tracker.record(std::abs(std::abs(a - 1.0) - (b - d)), 1e-12, input + " touch",
                       fmt(b - d), fmt(std::abs(a - 1.0)));

        const auto witness = sharpness_witness(query);
        tracker.record(witness.boundary_residual(), config.residual_tol, input + " witness",
                       "on boundary", fmt(witness.primary().value));
      }
    }
    for (int i = 1; i <= 10; ++i) {
      const double A = i / 10.0;
      const double janowski = janowski_radius(family, A, -1.0).sufficient;
      const double halfplane = *closed_form_radius({family, HalfPlane{(1.0 - A) / 2.0}});
      const double expected = family == Family::T1 ? (1.0 + A) / (4.0 + A) : (1.0 + A) / 6.0;
      const std::string input = tag + " A=" + fmt(A) + " B=-1";
      tracker.record(std::abs(janowski - halfplane), 1e-12, input + " vs halfplane",
                     fmt(halfplane), fmt(janowski));
      tracker.record(std::abs(janowski - expected), 1e-12, input + " closed form",
                     fmt(expected), fmt(janowski));
    }
  }
  return tracker.finish("radii.janowski");
}

inline SuiteResult suite_univalence(const VerificationConfig&) {
  Tracker tracker;
  for (const Family family : {Family::T1, Family::T2}) {
    const double zero = univalence_witness(family).real();
    const double expected = family == Family::T1 ? -0.4 : -1.0 / 3.0;
    const double radius = *closed_form_radius({family, HalfPlane{0.0}});
    const std::string tag = "family=" + std::string(to_string(family));
    tracker.record(std::abs(zero - expected), 1e-12, tag + " derivative zero",
                   fmt(expected), fmt(zero));
    tracker.record(std::abs(std::abs(zero) - radius), 1e-12,
                   tag + " |zero| vs starlikeness radius", fmt(radius), fmt(std::abs(zero)));
  }
  return tracker.finish("radii.univalence");
}

inline SuiteResult suite_factor_dominance(const VerificationConfig& config, FactorKind kind) {
  const std::uint64_t stream =
      kind == FactorKind::SqrtOnePlus ? stream_sqrt_factors : stream_exp_factors;
  const Tracker tracker = parallel_track(
      config.samples_per_family, resolve_threads(config.threads),
      [&](std::size_t i, Tracker& t) {
        SampleStream rng(config.seed, stream, i);
        const SubordinateFactor p = random_factor(kind, rng);
        const double offset = rng.uniform(0.0, 2.0 * std::numbers::pi);
        for (const double r : sampling::radii) {
          const double bound =
              kind == FactorKind::SqrtOnePlus ? sqrt_factor_bound(r) : exp_factor_bound(r);
          const ModulusRange range = factor_modulus_range(kind, r);
          for (std::size_t k = 0; k < config.boundary_samples; ++k) {
            const ComplexPoint z = sample_point(r, k, config.boundary_samples, offset);
            auto input = [&] { return "sample=" + std::to_string(i) + " z=" + fmt(z); };
            const double lhs = std::abs(log_derivative_factor(p, z));
            t.record(lhs - bound, config.dominance_slack, [&] {
              return Witness{input() + " |zp'/p|", "<= " + fmt(bound), fmt(lhs)};
            });
            const double modulus = std::abs(eval_factor(p, z));
            t.record(std::max(range.lo - modulus, modulus - range.hi), config.dominance_slack,
                     [&] {
                       return Witness{input() + " |p|",
                                      "in [" + fmt(range.lo) + ", " + fmt(range.hi) + "]",
                                      fmt(modulus)};
                     });
            const double pick = (1.0 - std::norm(eval_schwarz(p.map, z))) / (1.0 - r * r);
            const double slope = std::abs(eval_schwarz_deriv(p.map, z));
            t.record(slope - pick, config.dominance_slack, [&] {
              return Witness{input() + " schwarz-pick", "<= " + fmt(pick), fmt(slope)};
            });
          }
        }
      });
  return tracker.finish(kind == FactorKind::SqrtOnePlus ? "lemmas.sqrt_factor_dominance"
                                                        : "lemmas.exp_factor_dominance");
}

inline SuiteResult suite_member_dominance(const VerificationConfig& config, Family family) {
  const std::uint64_t stream = family == Family::T1 ? stream_t1_members : stream_t2_members;
  const BoundProfile profile{family};
  const Tracker tracker = parallel_track(
      config.samples_per_family, resolve_threads(config.threads),
      [&](std::size_t i, Tracker& t) {
        SampleStream rng(config.seed, stream, i);
        const ClassMember f = random_member(family, rng);
        const double offset = rng.uniform(0.0, 2.0 * std::numbers::pi);
        for (const double r : sampling::radii) {
          const double bound = member_bound(profile, r);
          const ModulusRange growth = member_growth_range(family, r);
          for (std::size_t k = 0; k < config.boundary_samples; ++k) {
            const ComplexPoint z = sample_point(r, k, config.boundary_samples, offset);
            auto input = [&] { return "sample=" + std::to_string(i) + " z=" + fmt(z); };
            const double lhs = std::abs(log_derivative_member(f, z) - 1.0);
            t.record(lhs - bound, config.dominance_slack, [&] {
              return Witness{input() + " |zf'/f-1|", "<= " + fmt(bound), fmt(lhs)};
            });
            const double modulus = std::abs(eval_member(f, z));
            t.record(std::max(growth.lo - modulus, modulus - growth.hi),
                     config.dominance_slack, [&] {
                       return Witness{input() + " |f|",
                                      "in [" + fmt(growth.lo) + ", " + fmt(growth.hi) + "]",
                                      fmt(modulus)};
                     });
          }
        }
      });
  return tracker.finish("lemmas.member_dominance." + std::string(to_string(family)));
}

inline SuiteResult suite_equality(const VerificationConfig& config) {
  Tracker tracker;
  const SubordinateFactor sqrt_identity{FactorKind::SqrtOnePlus, SchwarzMap::identity()};
  const SubordinateFactor exp_identity{FactorKind::Exp, SchwarzMap::identity()};
  for (const double r : sampling::radii) {
    const ComplexPoint z{-r, 0.0};
    const double lhs = std::abs(log_derivative_factor(sqrt_identity, z));
    const double bound = sqrt_factor_bound(r);
    tracker.record(std::abs(lhs - bound), 1e-12, "sqrt identity z=" + fmt(z), fmt(bound),
                   fmt(lhs));
    const ModulusRange range = factor_modulus_range(FactorKind::SqrtOnePlus, r);
    const double low = std::abs(eval_factor(sqrt_identity, z));
    tracker.record(std::abs(low - range.lo), 1e-12, "sqrt identity |p| z=" + fmt(z),
                   fmt(range.lo), fmt(low));
    if (r > sqrt2_minus_1) continue;
    for (std::size_t k = 0; k < config.boundary_samples; ++k) {
      const ComplexPoint zk = detail::sample_point(r, k, config.boundary_samples, 0.0);
      const double value = std::abs(log_derivative_factor(exp_identity, zk));
      tracker.record(std::abs(value - r), 1e-12, "exp identity z=" + fmt(zk),
                     fmt(exp_factor_bound(r)), fmt(value));
    }
  }
  return tracker.finish("lemmas.equality");
}

}  // namespace detail

inline VerificationReport verify_radii(const VerificationConfig& config) {
  config.validate();
  VerificationReport report;
  report.suites.push_back(detail::suite_inradius_catalog(config));
  report.suites.push_back(detail::suite_oracle_agreement(config));
  report.suites.push_back(detail::suite_sharpness(config));
  report.suites.push_back(detail::suite_alpha_monotonicity(config));
  report.suites.push_back(detail::suite_halfplane_disc(config));
  report.suites.push_back(detail::suite_parabola(config));
  report.suites.push_back(detail::suite_janowski(config));
  report.suites.push_back(detail::suite_univalence(config));
  return report;
}

inline VerificationReport verify_lemmas(const VerificationConfig& config) {
  config.validate();
  VerificationReport report;
  report.suites.push_back(detail::suite_factor_dominance(config, FactorKind::SqrtOnePlus));
  report.suites.push_back(detail::suite_factor_dominance(config, FactorKind::Exp));
  report.suites.push_back(detail::suite_member_dominance(config, Family::T1));
  report.suites.push_back(detail::suite_member_dominance(config, Family::T2));
  report.suites.push_back(detail::suite_equality(config));
  return report;
}

inline VerificationReport verify_all(const VerificationConfig& config) {
  VerificationReport report = verify_radii(config);
  report.append(verify_lemmas(config));
  return report;
}

/// One row of the reproduction table.
struct TableRow {
  Family family = Family::T1;
  Region region;
  std::string closed_form_expr;
  double closed_form_value = 0.0;
  double numeric_value = 0.0;
  double radius_residual = 0.0;
  double sharpness_residual = 0.0;
  Exactness exactness = Exactness::Exact;
};

inline std::vector<TableRow> catalog_table() {
  std::vector<TableRow> rows;
  for (const Family family : {Family::T1, Family::T2}) {
    for (const auto& region : table_regions()) {
      const RadiusReport report = radius_report({family, region});
      rows.push_back({family, region, report.closed_form_expr, *report.closed_form,
                      report.numeric, report.radius_residual(),
                      report.witness ? report.witness->boundary_residual() : 0.0,
                      report.exactness});
    }
  }
  return rows;
}

}  // namespace starlike
