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

#ifndef SIGTREND_CLI_COMMANDS_HPP
#define SIGTREND_CLI_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sigtrend/dataprep.hpp"
#include "sigtrend/expr.hpp"
#include "sigtrend/polyfit.hpp"
#include "sigtrend/render.hpp"
#include "sigtrend/sigdigits.hpp"
#include "sigtrend/verify.hpp"

namespace sigtrend::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFailed = 2;  // computed, but optimality/precedence check failed

enum class OutputFormat { text, json, csv };
enum class FitMode { automatic, interpolation, fitting };

struct RunConfig {
  std::string input;
  int degree = 1;
  FitMode mode = FitMode::automatic;
  std::optional<int> precision;         // declared P; inferred when absent
  std::optional<int> output_precision;  // coarser P for the output
  UnitScale units;
  OutputFormat format = OutputFormat::text;
  int samples = 200;
  EquationStyle style = EquationStyle::scientific;
  RSquaredBasis r2_basis = RSquaredBasis::regression_sum;
};

/// Everything cmd_fit computes, before formatting.
struct FitOutcome {
  Dataset data;
  PlanMode mode = PlanMode::interpolation;
  Polynomial full;
  PrecisionPlan plan;
  RoundedPolynomial rounded;
  std::string equation;
  VerificationReport verification;
  std::optional<RSquaredComparison> r2;
  std::optional<PrecisionPlan> unit_plan;      // positions for data in units of 1
  std::vector<real> unit_coefficients;         // rounded coefficients in units of 1
  std::string unit_equation;
  std::vector<std::string> warnings;
};

/// dataprep -> polyfit -> sigdigits -> verify. Throws on invalid input.
FitOutcome run_fit(const std::vector<Point>& raw, const RunConfig& config);

/// Sampled (x, y_rounded(x)) over [x_0, x_n].
std::vector<Point> curve_samples(const FitOutcome& outcome, int samples);

int cmd_fit(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SweepSpec {
  std::string variable;
  real lo = 0;
  real hi = 0;
  int samples = 50;
};

struct CheckConfig {
  std::string formula;
  std::vector<std::string> bindings;  // name=value
  std::optional<SweepSpec> sweep;
  OutputFormat format = OutputFormat::text;
};

int cmd_check(const CheckConfig& config, std::ostream& out, std::ostream& err);

struct PlanConfig {
  int precision = 0;
  int degree = 0;
  real x_max = 0;
  std::optional<int> offset;  // B
  std::optional<int> output_precision;
  OutputFormat format = OutputFormat::text;
};

int cmd_plan(const PlanConfig& config, std::ostream& out, std::ostream& err);

struct RescaleConfig {
  std::vector<int> positions;
  UnitScale units;
  OutputFormat format = OutputFormat::text;
};

int cmd_rescale(const RescaleConfig& config, std::ostream& out, std::ostream& err);

/// "-2,-4,-5" -> {-2, -4, -5}. Throws std::invalid_argument.
std::vector<int> parse_position_list(const std::string& text);
/// "name=value" -> (name, value). Throws std::invalid_argument.
std::pair<std::string, real> parse_binding(const std::string& text);
/// "t=0:1000[:50]". Throws std::invalid_argument.
SweepSpec parse_sweep(const std::string& text);

}  // namespace sigtrend::cli

#endif  // SIGTREND_CLI_COMMANDS_HPP
