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

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli/commands.hpp"

using namespace sigtrend;
using namespace sigtrend::cli;

namespace {

const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

// Runs `body` against --out if given, stdout otherwise.
template <class F>
int with_output(const std::string& path, F&& body) {
  if (path.empty()) return body(std::cout);
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kExitError;
  }
  return body(file);
}

// A formula such as "-x^2" would otherwise be read as a short option.
// A leading space keeps it positional; the lexer skips it.
std::vector<std::string> protect_formulas(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  static const std::vector<std::string> known{"-f", "-o", "-h"};
  bool after_separator = args.empty() || args.front() != "check";
  for (std::size_t i = 1; i < args.size(); ++i) {
    auto& a = args[i];
    if (a == "--") after_separator = true;
    if (after_separator || a.size() < 2 || a[0] != '-' || a[1] == '-') continue;
    if (std::find(known.begin(), known.end(), a) != known.end()) {
      ++i;  // skip the option's value
      continue;
    }
    a.insert(a.begin(), ' ');
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes the vector from the back
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial trends with the significant digits their data support", "sigtrend"};
  app.require_subcommand(1);
  std::string out_path;

  // fit
  RunConfig run;
  std::optional<int> precision;
  std::optional<int> output_precision;
  std::string mode = "auto";
  std::string style = "scientific";
  std::string r2_basis = "regression";
  auto* fit = app.add_subcommand("fit", "Fit a polynomial trend and round its coefficients");
  fit->add_option("input", run.input, "CSV file with x,y columns")->required();
  fit->add_option("-d,--degree", run.degree, "Polynomial degree")->required()->check(CLI::NonNegativeNumber);
  fit->add_option("-p,--precision", precision, "Position P of the last significant digit of y (10^P)");
  fit->add_option("--output-precision", output_precision, "Coarser output precision P (>= --precision)");
  fit->add_option("--units-x", run.units.x, "x is expressed in units of 10^u");
  fit->add_option("--units-y", run.units.y, "y is expressed in units of 10^u");
  fit->add_option("--mode", mode, "auto, interpolation or fitting")
      ->check(CLI::IsMember({"auto", "interpolation", "fitting"}));
  fit->add_option("--style", style, "Equation style")->check(CLI::IsMember({"scientific", "decimal"}));
  fit->add_option("--r2-basis", r2_basis, "R^2 denominator: regression or total sum of squares")
      ->check(CLI::IsMember({"regression", "total"}));
  fit->add_option("-f,--format", run.format, "text, json or csv (curve samples)")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  fit->add_option("-s,--samples", run.samples, "Curve samples for --format csv")
      ->check(CLI::Range(2, 1000000));
  fit->add_option("-o,--out", out_path, "Write output to a file");

  // check
  CheckConfig check;
  std::string sweep;
  auto* chk = app.add_subcommand("check", "Compare a formula under math and spreadsheet precedence");
  chk->add_option("formula", check.formula, "Formula, e.g. \"-x^2\"")->required();
  chk->add_option("bindings", check.bindings, "Variable values as name=value");
  chk->add_option("--sweep", sweep, "Also sweep a variable: name=lo:hi[:samples]");
  chk->add_option("-f,--format", check.format, "text or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  chk->add_option("-o,--out", out_path, "Write output to a file");

  // plan
  PlanConfig plan_cfg;
  double x_max = 0;
  std::optional<int> offset;
  auto* pln = app.add_subcommand("plan", "Digit positions for given P, degree and x_max");
  pln->add_option("-p,--precision", plan_cfg.precision, "Data precision P")->required();
  pln->add_option("-d,--degree", plan_cfg.degree, "Polynomial degree")->required()->check(CLI::NonNegativeNumber);
  pln->add_option("-x,--xmax", x_max, "Largest abscissa x_n")->required();
  pln->add_option("-b,--offset", offset, "Fit offset B (least-squares plans only)");
  pln->add_option("--output-precision", output_precision, "Coarser output precision P");
  pln->add_option("-f,--format", plan_cfg.format, "text or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  pln->add_option("-o,--out", out_path, "Write output to a file");

  // rescale
  RescaleConfig rescale;
  std::string positions;
  auto* rsc = app.add_subcommand("rescale", "Convert digit positions from units of 10^u to units of 1");
  rsc->add_option("--positions", positions, "Comma-separated positions p_0,...,p_d")->required();
  rsc->add_option("--units-x", rescale.units.x, "x unit exponent");
  rsc->add_option("--units-y", rescale.units.y, "y unit exponent");
  rsc->add_option("-f,--format", rescale.format, "text or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  rsc->add_option("-o,--out", out_path, "Write output to a file");

  try {
    app.parse(protect_formulas(argc, argv));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*fit) {
      run.precision = precision;
      run.output_precision = output_precision;
      run.mode = mode == "interpolation" ? FitMode::interpolation
                 : mode == "fitting"     ? FitMode::fitting
                                         : FitMode::automatic;
      run.style = style == "decimal" ? EquationStyle::decimal : EquationStyle::scientific;
      run.r2_basis = r2_basis == "total" ? RSquaredBasis::total_sum : RSquaredBasis::regression_sum;
      return with_output(out_path, [&](std::ostream& out) { return cmd_fit(run, out, std::cerr); });
    }
    if (*chk) {
      check.formula.erase(0, check.formula.find_first_not_of(' '));
      if (!sweep.empty()) check.sweep = parse_sweep(sweep);
      return with_output(out_path, [&](std::ostream& out) { return cmd_check(check, out, std::cerr); });
    }
    if (*pln) {
      plan_cfg.x_max = x_max;
      plan_cfg.offset = offset;
      plan_cfg.output_precision = output_precision;
      return with_output(out_path, [&](std::ostream& out) { return cmd_plan(plan_cfg, out, std::cerr); });
    }
    if (*rsc) {
      rescale.positions = parse_position_list(positions);
      return with_output(out_path, [&](std::ostream& out) { return cmd_rescale(rescale, out, std::cerr); });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
