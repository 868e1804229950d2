#pragma once

// Command-line front end. `run` takes the arguments after the program name and
// writes data to `out`, diagnostics to `err`.
//
//   radius  --family t1|t2 --target NAME [--alpha a] [--A a --B b] [--tol t]
//   verify  [--suite all|radii|lemmas] [--seed n] [--samples n] ...
//   bounds  --family t1|t2 --r r
//   table   [--format json|csv|text]
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starlike/bounds.hpp"
#include "starlike/harness.hpp"
#include "starlike/radii.hpp"
#include "starlike/regions.hpp"
#include "starlike/serialize.hpp"

namespace starlike::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_invalid_arguments = 2;

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Family family_flag(const std::string& name) {
  try {
    return parse_family(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline OutputFormat format_flag(const std::string& name, bool allow_csv) {
  OutputFormat format;
  try {
    format = parse_output_format(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!allow_csv && format == OutputFormat::Csv) {
    throw UsageError("csv output is only available for the table command");
  }
  return format;
}

inline Region region_flag(const std::string& name, std::optional<double> alpha,
                          std::optional<double> A, std::optional<double> B) {
  const bool takes_alpha = name == "halfplane" || name == "disc";
  const bool takes_ab = name == "janowski";
  if (alpha && !takes_alpha) throw UsageError("--alpha only applies to halfplane and disc");
  if ((A || B) && !takes_ab) throw UsageError("--A and --B only apply to janowski");
  try {
    if (name == "halfplane") return half_plane(alpha.value_or(0.0));
    if (name == "disc") return centered_disc(alpha.value_or(0.0));
    if (name == "janowski") return janowski_disc(A.value_or(1.0), B.value_or(-1.0));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (auto region = named_region(name)) return *region;
  throw UsageError("unknown target region '" + name +
                   "' (expected halfplane, disc, janowski, parabola, exp, cardioid, sine, "
                   "lune, rational, nephroid or sigmoid)");
}

inline unsigned threads_from_env() {
  const char* env = std::getenv("STARLIKE_RADIUS_THREADS");
  if (env == nullptr) return 0;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value <= 0) {
    throw UsageError("STARLIKE_RADIUS_THREADS must be a positive integer");
  }
  return static_cast<unsigned>(value);
}

inline std::string one_line(std::string message) {
  std::replace(message.begin(), message.end(), '\n', ' ');
  return message;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radii of starlikeness for the classes T1 and T2", "starlike"};
  app.require_subcommand(1);

  struct {
    std::string family;
    std::string target;
    std::optional<double> alpha;
    std::optional<double> A;
    std::optional<double> B;
    double tol = default_tolerances.round_trip;
    double r = 0.0;
    std::string format = "json";
    std::string suite = "all";
    VerificationConfig config;
  } opts;

  auto* radius = app.add_subcommand("radius", "Closed-form and numeric radius for one query");
  radius->add_option("--family", opts.family, "t1 or t2")->required();
  radius->add_option("--target", opts.target, "Target region name")->required();
  radius->add_option("--alpha", opts.alpha, "Order for halfplane/disc, in [0,1)");
  radius->add_option("--A", opts.A, "Janowski A (default 1)");
  radius->add_option("--B", opts.B, "Janowski B (default -1)");
  radius->add_option("--tol", opts.tol, "Numeric solver tolerance")->capture_default_str();
  radius->add_option("--format", opts.format, "json or text")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", opts.suite, "all, radii or lemmas")->capture_default_str();
  verify->add_option("--seed", opts.config.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--samples", opts.config.samples_per_family,
                     "Random factors/members per family")
      ->capture_default_str();
  verify->add_option("--boundary-samples", opts.config.boundary_samples,
                     "Points per circle |z| = r")
      ->capture_default_str();
  verify->add_option("--radius-tol", opts.config.radius_tol)->capture_default_str();
  verify->add_option("--residual-tol", opts.config.residual_tol)->capture_default_str();
  verify->add_option("--slack", opts.config.dominance_slack, "Dominance slack")
      ->capture_default_str();
  verify->add_option("--format", opts.format, "json or text")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Aggregate bound and growth range at radius r");
  bounds->add_option("--family", opts.family, "t1 or t2")->required();
  bounds->add_option("--r", opts.r, "Radius in [0,1)")->required();
  bounds->add_option("--format", opts.format, "json or text")->capture_default_str();

  auto* table = app.add_subcommand("table", "Catalog of every radius");
  table->add_option("--format", opts.format, "json, csv or text")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << detail::one_line(e.what()) << "\n";
    return exit_invalid_arguments;
  }

  try {
    if (radius->parsed()) {
      const Family family = detail::family_flag(opts.family);
      const Region region = detail::region_flag(opts.target, opts.alpha, opts.A, opts.B);
      const OutputFormat format = detail::format_flag(opts.format, false);
      if (!(opts.tol > 0.0)) throw detail::UsageError("tol must be positive");
      const RadiusReport report = radius_report({family, region}, opts.tol);
      if (format == OutputFormat::Json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << describe(report.query) << "\n"
            << "closed_form " << report.closed_form_expr << " = "
            << starlike::detail::fixed_digits(report.closed_form.value_or(0.0), 10) << "\n"
            << "numeric     " << starlike::detail::fixed_digits(report.numeric, 10) << "\n"
            << "exactness   " << to_string(report.exactness) << "\n";
        if (report.witness) {
          out << "witness     z=" << starlike::detail::fmt(report.witness->primary().z)
              << " zf'/f=" << starlike::detail::fmt(report.witness->primary().value)
              << " residual="
              << starlike::detail::fixed_digits(report.witness->boundary_residual(), 10)
              << "\n";
        }
      }
      return exit_ok;
    }

    if (verify->parsed()) {
      const OutputFormat format = detail::format_flag(opts.format, false);
      if (opts.suite != "all" && opts.suite != "radii" && opts.suite != "lemmas") {
        throw detail::UsageError("unknown suite '" + opts.suite +
                                 "' (expected all, radii or lemmas)");
      }
      try {
        opts.config.validate();
      } catch (const std::invalid_argument& e) {
        throw detail::UsageError(e.what());
      }
      opts.config.threads = detail::threads_from_env();
      const VerificationReport report = opts.suite == "radii"    ? verify_radii(opts.config)
                                        : opts.suite == "lemmas" ? verify_lemmas(opts.config)
                                                                 : verify_all(opts.config);
      if (format == OutputFormat::Json) {
        out << to_json(report, opts.config).dump(2) << "\n";
      } else {
        out << render_text(report);
      }
      for (const auto& suite : report.suites) {
        if (!suite.pass) {
          err << "suite " << suite.name << " failed: " << suite.witness.input << "\n";
        }
      }
      return report.overall() ? exit_ok : exit_verification_failed;
    }

    if (bounds->parsed()) {
      const Family family = detail::family_flag(opts.family);
      const OutputFormat format = detail::format_flag(opts.format, false);
      if (!(opts.r >= 0.0 && opts.r < 1.0)) throw detail::UsageError("r must lie in [0,1)");
      const double bound = member_bound(BoundProfile{family}, opts.r);
      const ModulusRange growth = member_growth_range(family, opts.r);
      const double factor = family == Family::T1 ? sqrt_factor_bound(opts.r)
                                                 : exp_factor_bound(opts.r);
      const ModulusRange modulus = factor_modulus_range(factor_kind(family), opts.r);
      if (format == OutputFormat::Json) {
        const Json j{{"family", to_string(family)},
                     {"r", opts.r},
                     {"member_bound", bound},
                     {"factor_bound", factor},
                     {"growth_range", {{"lo", growth.lo}, {"hi", growth.hi}}},
                     {"factor_modulus_range", {{"lo", modulus.lo}, {"hi", modulus.hi}}}};
        out << j.dump(2) << "\n";
      } else {
        using starlike::detail::fixed_digits;
        out << "member_bound  " << fixed_digits(bound, 10) << "\n"
            << "factor_bound  " << fixed_digits(factor, 10) << "\n"
            << "growth_range  [" << fixed_digits(growth.lo, 10) << ", "
            << fixed_digits(growth.hi, 10) << "]\n";
      }
      return exit_ok;
    }

    if (table->parsed()) {
      out << emit_table(detail::format_flag(opts.format, true));
      return exit_ok;
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_arguments;
  }
  return exit_invalid_arguments;
}

}  // namespace starlike::cli
