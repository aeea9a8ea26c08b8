// Copyright 2026 The sigtrend Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/report.hpp"

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "sigtrend/decimal.hpp"

namespace sigtrend::cli {

namespace {

using json = nlohmann::ordered_json;

std::string shortest(real v) { return to_shortest_string(v == 0 ? 0 : v); }

std::string sig10(real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10Lg", v);
  return buf;
}

std::string power_of_ten(int p) { return "10^" + std::to_string(p); }

json optional_number(const std::optional<real>& v) {
  return v ? json(static_cast<double>(*v)) : json(nullptr);
}

json number_array(std::span<const real> values) {
  json a = json::array();
  for (real v : values) a.push_back(static_cast<double>(v));
  return a;
}

json plan_json(const PrecisionPlan& p) {
  json j;
  j["P"] = p.precision;
  j["P_declared"] = p.declared_precision;
  j["B"] = p.fit_offset ? json(*p.fit_offset) : json(nullptr);
  j["c_bar"] = static_cast<double>(p.mantissa);
  j["P_bar"] = p.exponent;
  j["x_max"] = static_cast<double>(p.x_max);
  j["mode"] = p.mode == PlanMode::fitting ? "fitting" : "interpolation";
  j["positions"] = p.positions;
  j["raw_positions"] = number_array(p.raw_positions);
  return j;
}

}  // namespace

std::string shortest_double(real v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, static_cast<double>(v));
  return std::string(buf, res.ptr);
}


void write_plan_text(std::ostream& out, const PrecisionPlan& p) {
  out << "precision plan: P = " << p.precision;
  if (p.precision != p.declared_precision) out << " (data 10^" << p.declared_precision << ")";
  out << ", B = " << (p.fit_offset ? std::to_string(*p.fit_offset) : std::string("-"))
      << ", x_max = " << shortest(p.x_max) << " = " << shortest(p.mantissa) << "*10^" << p.exponent
      << " (" << (p.mode == PlanMode::fitting ? "fitting" : "interpolation") << ")\n";
  out << "  k   P-1+B-k*P_bar-k*log10(c)   last digit\n";
  for (std::size_t k = 0; k < p.positions.size(); ++k) {
    char raw[32];
    std::snprintf(raw, sizeof raw, "%.3Lf", p.raw_positions[k]);
    out << "  " << std::left << std::setw(4) << k << std::setw(27) << raw << power_of_ten(p.positions[k])
        << '\n';
  }
  out << std::right;
}

void write_plan_json(std::ostream& out, const PrecisionPlan& p) {
  out << plan_json(p).dump(2) << '\n';
}

void write_text_report(std::ostream& out, const FitOutcome& o) {
  const auto& d = o.data;
  out << "data\n";
  out << "  points       " << d.size() << '\n';
  out << "  x range      [" << shortest(d.x_min()) << ", " << shortest(d.x_max()) << "]\n";
  out << "  y max        " << shortest(d.y_max()) << '\n';
  out << "  shift        x + " << shortest(d.x_shift()) << ", y + " << shortest(d.y_shift()) << '\n';
  out << "  precision    P = " << d.y_precision() << (d.precision_declared() ? " (declared)" : " (inferred)")
      << '\n';
  out << "model\n";
  out << "  mode         "
      << (o.mode == PlanMode::fitting ? "least squares" : "interpolation") << ", degree "
      << o.full.degree() << ", n = " << d.last_index() << '\n';
  out << "  R^2          " << (o.full.r_squared() ? sig10(*o.full.r_squared()) : std::string("1 (interpolation)"))
      << '\n';
  out << "  condition    " << sig10(o.full.condition_estimate()) << '\n';
  out << "full-precision coefficients\n";
  for (int k = 0; k <= o.full.degree(); ++k) {
    out << "  a" << std::left << std::setw(4) << k << std::right << shortest(o.full.coefficient(k)) << '\n';
  }
  write_plan_text(out, o.plan);
  out << "optimal coefficients\n";
  for (int k = 0; k <= o.rounded.degree(); ++k) {
    out << "  a" << std::left << std::setw(4) << k << std::right;
    if (o.rounded.dropped(k)) {
      out << "0 (dropped)\n";
    } else {
      const real a = o.rounded.coefficient(k);
      out << (a < 0 ? "-" : "")
          << format_coefficient(a, o.plan.positions[static_cast<std::size_t>(k)], EquationStyle::scientific)
          << '\n';
    }
  }
  out << "equation\n  y = " << o.equation << '\n';
  if (o.unit_plan) {
    out << "in units of 1 (x * 10^" << (o.unit_plan->exponent - o.plan.exponent) << ", y * 10^"
        << (o.unit_plan->precision - o.plan.precision) << ")\n";
    for (std::size_t k = 0; k < o.unit_coefficients.size(); ++k) {
      const real a = o.unit_coefficients[k];
      out << "  a" << std::left << std::setw(4) << k << std::right << (a < 0 ? "-" : "")
          << format_coefficient(a, o.unit_plan->positions[k], EquationStyle::scientific) << '\n';
    }
    out << "  y = " << o.unit_equation << '\n';
  }

  const auto& v = o.verification;
  out << "verification\n";
  out << "  " << std::setw(14) << "x" << std::setw(14) << "y";
  for (const auto& l : v.labels) out << std::setw(18) << ("|y-" + l + "|");
  out << '\n';
  for (const auto& row : v.rows) {
    out << "  " << std::setw(14) << shortest(row.x) << std::setw(14) << shortest(row.y);
    for (real r : row.residuals) out << std::setw(18) << sig10(r);
    out << '\n';
  }
  if (o.r2) {
    out << "  R^2 full     " << sig10(o.r2->full) << '\n';
    out << "  R^2 rounded  " << sig10(o.r2->rounded) << '\n';
    out << "  R^2 delta    " << sig10(o.r2->delta) << '\n';
  }
  const auto& check = *v.optimality;
  out << "  max |rounded - full| = " << sig10(check.max_deviation) << " at x = "
      << shortest(d.points()[check.worst_point].x) << "; bound (d+1)*0.5*10^(P+B) = "
      << sig10(check.bound) << " -> " << (check.pass ? "PASS" : "FAIL") << '\n';
}

void write_json_report(std::ostream& out, const FitOutcome& o) {
  const auto& d = o.data;
  json j;
  j["data_summary"] = {
      {"points", d.size()},
      {"x_min", static_cast<double>(d.x_min())},
      {"x_max", static_cast<double>(d.x_max())},
      {"y_max", static_cast<double>(d.y_max())},
      {"x_shift", static_cast<double>(d.x_shift())},
      {"y_shift", static_cast<double>(d.y_shift())},
      {"precision", d.y_precision()},
      {"precision_declared", d.precision_declared()},
      {"degree", o.full.degree()},
      {"mode", o.mode == PlanMode::fitting ? "fitting" : "interpolation"},
  };
  j["full_coefficients"] = number_array(o.full.coefficients());
  j["plan"] = plan_json(o.plan);
  j["rounded_coefficients"] = number_array(o.rounded.coefficients());
  j["dropped_terms"] = o.rounded.dropped_terms();
  j["equation"] = o.equation;

  json residuals = json::array();
  for (const auto& row : o.verification.rows) {
    residuals.push_back({{"x", static_cast<double>(row.x)},
                         {"y", static_cast<double>(row.y)},
                         {"full", static_cast<double>(row.residuals.at(0))},
                         {"rounded", static_cast<double>(row.residuals.at(1))}});
  }
  const auto& check = *o.verification.optimality;
  j["verification"] = {
      {"residuals", residuals},
      {"r2_full", o.r2 ? json(static_cast<double>(o.r2->full)) : json(nullptr)},
      {"r2_rounded", o.r2 ? json(static_cast<double>(o.r2->rounded)) : json(nullptr)},
      {"max_deviation", static_cast<double>(check.max_deviation)},
      {"worst_point", check.worst_point},
      {"bound", static_cast<double>(check.bound)},
      {"pass", check.pass},
  };
  if (o.unit_plan) {
    j["unit_scaled"] = {{"plan", plan_json(*o.unit_plan)},
                        {"rounded_coefficients", number_array(o.unit_coefficients)},
                        {"equation", o.unit_equation}};
  }
  out << j.dump(2) << '\n';
}

void write_curve_csv(std::ostream& out, const std::vector<Point>& samples) {
  out << "x,y\n";
  // Double precision is plenty for plotting and hides long double evaluation noise.
  for (const auto& p : samples) {
    out << shortest_double(p.x) << ',' << shortest_double(p.y) << '\n';
  }
}

void write_rescale_json(std::ostream& out, const std::vector<int>& positions, UnitScale units,
                        const std::vector<int>& scaled) {
  json j;
  j["units_x"] = units.x;
  j["units_y"] = units.y;
  j["positions"] = positions;
  j["rescaled_positions"] = scaled;
  out << j.dump(2) << '\n';
}

void write_check_json(std::ostream& out, const std::string& formula,
                      const std::optional<real>& math_value,
                      const std::optional<real>& spreadsheet_value,
                      const std::vector<expr::Discrepancy>& discrepancies,
                      const std::vector<expr::SweepHit>& sweep_hits, const std::string& safe_form) {
  json j;
  j["formula"] = formula;
  j["math"] = optional_number(math_value);
  j["spreadsheet"] = optional_number(spreadsheet_value);
  json list = json::array();
  for (const auto& d : discrepancies) {
    list.push_back({{"begin", d.span.begin},
                    {"end", d.span.end},
                    {"text", d.text},
                    {"math", optional_number(d.math_value)},
                    {"spreadsheet", optional_number(d.spreadsheet_value)}});
  }
  j["discrepancies"] = list;
  json hits = json::array();
  for (const auto& h : sweep_hits) {
    hits.push_back({{"at", static_cast<double>(h.at)},
                    {"math", optional_number(h.math_value)},
                    {"spreadsheet", optional_number(h.spreadsheet_value)}});
  }
  j["sweep_disagreements"] = hits;
  j["safe_form"] = safe_form;
  out << j.dump(2) << '\n';
}

}  // namespace sigtrend::cli
