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

#include "cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cli/report.hpp"
#include "sigtrend/csv.hpp"
#include "sigtrend/decimal.hpp"

namespace sigtrend::cli {

namespace {

real parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  real v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return v;
}

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

void collect_variables(const expr::Node& node, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Variable>) {
          out.insert(n.name);
        } else if constexpr (std::is_same_v<T, expr::Negate>) {
          collect_variables(*n.operand, out);
        } else if constexpr (std::is_same_v<T, expr::Binary>) {
          collect_variables(*n.lhs, out);
          collect_variables(*n.rhs, out);
        } else if constexpr (std::is_same_v<T, expr::Call>) {
          collect_variables(*n.argument, out);
        } else if constexpr (std::is_same_v<T, expr::Group>) {
          collect_variables(*n.inner, out);
        }
      },
      node.kind);
}

}  // namespace

std::vector<int> parse_position_list(const std::string& text) {
  std::vector<int> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    out.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("empty position list");
  return out;
}

std::pair<std::string, real> parse_binding(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("binding must look like name=value: '" + text + "'");
  }
  return {text.substr(0, eq), parse_real(std::string_view(text).substr(eq + 1))};
}

SweepSpec parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("sweep must look like name=lo:hi[:samples]: '" + text + "'");
  }
  SweepSpec s;
  s.variable = text.substr(0, eq);
  std::string_view rest = std::string_view(text).substr(eq + 1);
  const auto c1 = rest.find(':');
  if (c1 == std::string_view::npos) throw std::invalid_argument("sweep needs lo:hi");
  s.lo = parse_real(rest.substr(0, c1));
  rest.remove_prefix(c1 + 1);
  const auto c2 = rest.find(':');
  s.hi = parse_real(rest.substr(0, c2));
  if (c2 != std::string_view::npos) s.samples = parse_int(rest.substr(c2 + 1));
  if (s.samples < 2) throw std::invalid_argument("sweep needs at least 2 samples");
  return s;
}

FitOutcome run_fit(const std::vector<Point>& raw, const RunConfig& config) {
  if (raw.empty()) throw DomainError("empty dataset");
  if (config.degree < 0) throw DomainError("degree must be non-negative");
  if (config.samples < 2) throw DomainError("samples must be at least 2");

  FitOutcome out;
  const auto n = raw.size() - 1;
  const bool interpolating = config.mode == FitMode::automatic
                                 ? static_cast<std::size_t>(config.degree) == n
                                 : config.mode == FitMode::interpolation;
  const auto policy = static_cast<std::size_t>(config.degree) == n ? DuplicateX::reject
                                                                    : DuplicateX::warn;
  out.data = prepare(raw, config.precision, policy);
  if (out.data.x_shift() != 0 || out.data.y_shift() != 0) {
    out.warnings.push_back("data translated by (" + to_shortest_string(out.data.x_shift()) + ", " +
                           to_shortest_string(out.data.y_shift()) +
                           ") into the non-negative quadrant; the model is in shifted coordinates");
  }
  for (real x : out.data.repeated_x()) {
    out.warnings.push_back("repeated abscissa x = " + to_shortest_string(x));
  }
  if (!out.data.precision_declared()) {
    out.warnings.push_back("no --precision given; inferred P = " +
                           std::to_string(out.data.y_precision()) +
                           " from the y values (declare it if the data were averaged)");
  }

  out.full = fit(out.data, config.degree, FitOptions{config.r2_basis});

  std::optional<int> offset;
  if (!interpolating) {
    if (!out.full.r_squared()) {
      throw DomainError("R^2 is undefined for this fit; cannot compute the fit offset B");
    }
    if (out.data.x_max() <= 0 || out.data.y_max() <= 0) {
      throw DomainError("fitting mode needs x_max > 0 and y_max > 0");
    }
    offset = compute_fit_offset(*out.full.r_squared(), out.data.y_max());
    if (!offset) {
      out.warnings.push_back("R^2 = 1: using the interpolation form of the plan");
    }
  }
  out.mode = offset ? PlanMode::fitting : PlanMode::interpolation;

  if (out.data.x_max() <= 0) throw DomainError("x_max must be positive");
  out.plan = plan(out.data.y_precision(), config.degree, out.data.x_max(), offset);
  out.plan.declared_precision = out.data.y_precision();
  if (config.output_precision) out.plan = coarsen(out.plan, *config.output_precision);

  check_conditioning(out.full, out.plan);

  out.rounded = round_coefficients(out.full, out.plan);
  out.equation = render_equation(out.rounded, config.style);
  out.verification = verify(out.data, out.full, out.rounded, config.r2_basis);
  if (out.mode == PlanMode::fitting) {
    out.r2 = compare_r_squared(out.data, out.full, out.rounded, config.r2_basis);
  }

  if (config.units.x != 0 || config.units.y != 0) {
    out.unit_plan = rescale_positions(out.plan, config.units);
    for (int k = 0; k <= out.rounded.degree(); ++k) {
      out.unit_coefficients.push_back(
          shift_decimal(out.rounded.coefficient(k), config.units.y - k * config.units.x));
    }
    out.unit_equation = render_equation(RoundedPolynomial(out.unit_coefficients, *out.unit_plan), config.style);
  }
  return out;
}

std::vector<Point> curve_samples(const FitOutcome& outcome, int samples) {
  std::vector<Point> pts;
  const real lo = outcome.data.x_min();
  const real hi = outcome.data.x_max();
  pts.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const real x = i == samples - 1 ? hi : lo + (hi - lo) * static_cast<real>(i) / static_cast<real>(samples - 1);
    pts.push_back({x, evaluate(outcome.rounded.coefficients(), x)});
  }
  return pts;
}

int cmd_fit(const RunConfig& config, std::ostream& out, std::ostream& err) {
  FitOutcome outcome;
  try {
    const auto raw = read_points_file(config.input);
    outcome = run_fit(raw, config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  for (const auto& w : outcome.warnings) err << "warning: " << w << '\n';

  switch (config.format) {
    case OutputFormat::text:
      write_text_report(out, outcome);
      break;
    case OutputFormat::json:
      write_json_report(out, outcome);
      break;
    case OutputFormat::csv:
      write_curve_csv(out, curve_samples(outcome, config.samples));
      break;
  }
  return outcome.verification.optimality->pass ? kExitOk : kExitFailed;
}

int cmd_check(const CheckConfig& config, std::ostream& out, std::ostream& err) {
  expr::Env env;
  std::optional<expr::Ast> math;
  std::optional<expr::Ast> sheet;
  std::vector<expr::Discrepancy> found;
  std::vector<expr::SweepHit> hits;
  std::optional<real> vm;
  std::optional<real> vs;
  std::string vm_error;
  std::string vs_error;
  try {
    if (config.formula.empty()) throw std::invalid_argument("empty formula");
    for (const auto& b : config.bindings) {
      auto [name, value] = parse_binding(b);
      env[name] = value;
    }
    math = expr::parse(config.formula, expr::Precedence::math);
    sheet = expr::parse(config.formula, expr::Precedence::spreadsheet);

    std::set<std::string> vars;
    collect_variables(math->root(), vars);
    for (const auto& v : vars) {
      if (!env.contains(v) && !(config.sweep && config.sweep->variable == v)) {
        throw std::invalid_argument("no value bound for variable '" + v + "'");
      }
    }
    if (config.sweep) {
      hits = expr::discrepancy_sweep(config.formula, env, config.sweep->variable, config.sweep->lo,
                                     config.sweep->hi, config.sweep->samples);
      if (!env.contains(config.sweep->variable)) env[config.sweep->variable] = config.sweep->lo;
    }
    try {
      vm = expr::evaluate(*math, env);
    } catch (const DomainError& e) {
      vm_error = e.what();
    }
    try {
      vs = expr::evaluate(*sheet, env);
    } catch (const DomainError& e) {
      vs_error = e.what();
    }
    found = expr::discrepancy_scan(config.formula, env);
  } catch (const expr::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  const auto safe = expr::emit_safe(*math);
  auto value_text = [](const std::optional<real>& v, const std::string& e) {
    // Shown at double precision, like the JSON output.
    return v ? shortest_double(*v) : "error (" + e + ")";
  };

  if (config.format == OutputFormat::json) {
    write_check_json(out, config.formula, vm, vs, found, hits, safe);
  } else {
    out << "formula      " << config.formula << '\n';
    out << "math         " << value_text(vm, vm_error) << '\n';
    out << "spreadsheet  " << value_text(vs, vs_error) << '\n';
    out << "discrepancies " << found.size() << '\n';
    for (const auto& d : found) {
      out << "  [" << d.span.begin << ", " << d.span.end << ") " << d.text
          << "   math = " << value_text(d.math_value, "undefined")
          << ", spreadsheet = " << value_text(d.spreadsheet_value, "undefined") << '\n';
    }
    if (config.sweep) {
      out << "sweep        " << config.sweep->variable << " over [" << to_shortest_string(config.sweep->lo)
          << ", " << to_shortest_string(config.sweep->hi) << "], " << config.sweep->samples
          << " samples: " << hits.size() << " disagree\n";
    }
    out << "safe form    " << safe << '\n';
  }
  return found.empty() && hits.empty() ? kExitOk : kExitFailed;
}

int cmd_plan(const PlanConfig& config, std::ostream& out, std::ostream& err) {
  PrecisionPlan p;
  try {
    p = plan(config.precision, config.degree, config.x_max, config.offset);
    if (config.output_precision) p = coarsen(p, *config.output_precision);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (config.format == OutputFormat::json) {
    write_plan_json(out, p);
  } else {
    write_plan_text(out, p);
  }
  return kExitOk;
}

int cmd_rescale(const RescaleConfig& config, std::ostream& out, std::ostream& err) {
  if (config.positions.empty()) {
    err << "error: no positions given\n";
    return kExitError;
  }
  PrecisionPlan given;
  given.positions = config.positions;
  given.raw_positions.assign(config.positions.begin(), config.positions.end());
  const auto scaled = rescale_positions(given, config.units).positions;
  if (config.format == OutputFormat::json) {
    write_rescale_json(out, config.positions, config.units, scaled);
  } else {
    out << "units        x in 10^" << config.units.x << ", y in 10^" << config.units.y << '\n';
    out << "k   position   units of 1\n";
    for (std::size_t k = 0; k < scaled.size(); ++k) {
      out << std::left << std::setw(4) << k << std::setw(11) << ("10^" + std::to_string(config.positions[k]))
          << "10^" << scaled[k] << '\n';
    }
  }
  return kExitOk;
}

}  // namespace sigtrend::cli
