#pragma once

// JSON, CSV and text renderings of radius reports, verification reports and the
// catalog table. Output is a pure function of its input, so repeated runs are
// byte-identical.

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "starlike/harness.hpp"
#include "starlike/radii.hpp"
#include "starlike/regions.hpp"

namespace starlike {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Text };

inline OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "' (expected json, csv or text)");
}

namespace detail {

inline std::string fixed_digits(double x, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace detail

inline Json to_json(ComplexPoint z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json region_params_json(const Region& region) {
  return std::visit(overloaded{[](HalfPlane h) { return Json{{"alpha", h.alpha}}; },
                               [](CenteredDisc d) { return Json{{"alpha", d.alpha}}; },
                               [](JanowskiDisc j) { return Json{{"A", j.A}, {"B", j.B}}; },
                               [](const auto&) { return Json::object(); }},
                    region);
}

inline std::string region_params_text(const Region& region) {
  using detail::fixed_digits;
  return std::visit(
      overloaded{[](HalfPlane h) { return "alpha=" + fixed_digits(h.alpha, 17); },
                 [](CenteredDisc d) { return "alpha=" + fixed_digits(d.alpha, 17); },
                 [](JanowskiDisc j) {
                   return "A=" + fixed_digits(j.A, 17) + ";B=" + fixed_digits(j.B, 17);
                 },
                 [](const auto&) { return std::string{}; }},
      region);
}

inline Json to_json(const RadiusReport& report) {
  Json j;
  j["family"] = to_string(report.query.family);
  j["region"] = region_name(report.query.region);
  j["params"] = region_params_json(report.query.region);
  j["closed_form_expr"] = report.closed_form_expr;
  j["closed_form"] = report.closed_form ? Json(*report.closed_form) : Json(nullptr);
  j["numeric"] = report.numeric;
  j["radius_residual"] = report.radius_residual();
  j["exactness"] = to_string(report.exactness);
  if (report.witness) {
    j["witness_z"] = to_json(report.witness->primary().z);
    j["witness_value"] = to_json(report.witness->primary().value);
    j["boundary_residual"] = report.witness->boundary_residual();
    Json points = Json::array();
    for (const auto& p : report.witness->points) {
      points.push_back({{"z", to_json(p.z)},
                        {"value", to_json(p.value)},
                        {"boundary_residual", p.boundary_residual}});
    }
    j["witness_points"] = std::move(points);
  } else {
    j["witness_z"] = nullptr;
    j["witness_value"] = nullptr;
    j["boundary_residual"] = nullptr;
    j["witness_points"] = Json::array();
  }
  return j;
}

inline Json to_json(const VerificationConfig& config) {
  return Json{{"seed", config.seed},
              {"samples_per_family", config.samples_per_family},
              {"boundary_samples", config.boundary_samples},
              {"radius_tol", config.radius_tol},
              {"residual_tol", config.residual_tol},
              {"dominance_slack", config.dominance_slack}};
}

inline Json to_json(const SuiteResult& suite) {
  Json j;
  j["name"] = suite.name;
  j["pass"] = suite.pass;
  j["worst_residual"] = suite.worst_residual;
  j["witness"] = Json{{"input", suite.witness.input},
                      {"expected", suite.witness.expected},
                      {"got", suite.witness.got},
                      {"residual", suite.witness.residual}};
  j["checks"] = suite.checks;
  j["diagnostics"] = suite.diagnostics;
  return j;
}

inline Json to_json(const VerificationReport& report, const VerificationConfig& config) {
  Json suites = Json::array();
  for (const auto& suite : report.suites) suites.push_back(to_json(suite));
  return Json{{"config", to_json(config)}, {"suites", std::move(suites)},
              {"overall", report.overall()}};
}

inline std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& suite : report.suites) {
    out << (suite.pass ? "PASS " : "FAIL ") << suite.name
        << "  checks=" << suite.checks
        << "  worst_residual=" << detail::fixed_digits(suite.worst_residual, 10) << "\n";
    if (!suite.pass) {
      out << "     input: " << suite.witness.input << "\n"
          << "  expected: " << suite.witness.expected << "\n"
          << "       got: " << suite.witness.got << "\n";
    }
    for (const auto& note : suite.diagnostics) out << "      note: " << note << "\n";
  }
  out << (report.overall() ? "overall: PASS" : "overall: FAIL") << "\n";
  return out.str();
}

inline Json to_json(const TableRow& row) {
  Json j;
  j["family"] = to_string(row.family);
  j["region"] = region_name(row.region);
  j["params"] = region_params_json(row.region);
  j["closed_form_expr"] = row.closed_form_expr;
  j["closed_form_value"] = row.closed_form_value;
  j["numeric_value"] = row.numeric_value;
  j["radius_residual"] = row.radius_residual;
  j["sharpness_residual"] = row.sharpness_residual;
  j["exactness"] = to_string(row.exactness);
  return j;
}

/// The catalog table: 2 families x 10 regions.
inline std::string emit_table(OutputFormat format) {
  const auto rows = catalog_table();
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json: {
      Json j = Json::array();
      for (const auto& row : rows) j.push_back(to_json(row));
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      using detail::csv_field;
      using detail::fixed_digits;
      out << "family,region,params,closed_form_expr,closed_form_value,numeric_value,"
             "radius_residual,sharpness_residual,exactness\n";
      for (const auto& row : rows) {
        out << to_string(row.family) << ',' << region_name(row.region) << ','
            << csv_field(region_params_text(row.region)) << ','
            << csv_field(row.closed_form_expr) << ','
            << fixed_digits(row.closed_form_value, 17) << ','
            << fixed_digits(row.numeric_value, 17) << ','
            << fixed_digits(row.radius_residual, 17) << ','
            << fixed_digits(row.sharpness_residual, 17) << ',' << to_string(row.exactness)
            << '\n';
      }
      break;
    }
    case OutputFormat::Text: {
      using detail::fixed_digits;
      char line[256];
      std::snprintf(line, sizeof line, "%-6s %-10s %-10s %-28s %-14s %-14s %-16s %-16s %s\n",
                    "family", "region", "params", "closed_form", "value", "numeric",
                    "residual", "sharpness", "exactness");
      out << line;
      for (const auto& row : rows) {
        std::snprintf(line, sizeof line,
                      "%-6s %-10s %-10s %-28s %-14s %-14s %-16s %-16s %s\n",
                      std::string(to_string(row.family)).c_str(),
                      std::string(region_name(row.region)).c_str(),
                      region_params_text(row.region).c_str(), row.closed_form_expr.c_str(),
                      fixed_digits(row.closed_form_value, 10).c_str(),
                      fixed_digits(row.numeric_value, 10).c_str(),
                      fixed_digits(row.radius_residual, 10).c_str(),
                      fixed_digits(row.sharpness_residual, 10).c_str(),
                      std::string(to_string(row.exactness)).c_str());
        out << line;
      }
      break;
    }
  }
  return out.str();
}

}  // namespace starlike
