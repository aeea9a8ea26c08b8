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

#ifndef SIGTREND_CLI_REPORT_HPP
#define SIGTREND_CLI_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/commands.hpp"

namespace sigtrend::cli {

/// Shortest round-trip text of `v` at double precision; used for values
/// whose long double tail is evaluation noise.
std::string shortest_double(real v);

void write_text_report(std::ostream& out, const FitOutcome& outcome);

/// Top-level keys: data_summary, full_coefficients, plan, rounded_coefficients,
/// dropped_terms, equation, verification (+ unit_scaled when units are set).
void write_json_report(std::ostream& out, const FitOutcome& outcome);

/// Two columns with header "x,y".
void write_curve_csv(std::ostream& out, const std::vector<Point>& samples);

void write_plan_text(std::ostream& out, const PrecisionPlan& plan);
void write_plan_json(std::ostream& out, const PrecisionPlan& plan);
void write_rescale_json(std::ostream& out, const std::vector<int>& positions, UnitScale units,
                        const std::vector<int>& scaled);
void write_check_json(std::ostream& out, const std::string& formula,
                      const std::optional<real>& math_value,
                      const std::optional<real>& spreadsheet_value,
                      const std::vector<expr::Discrepancy>& discrepancies,
                      const std::vector<expr::SweepHit>& sweep_hits, const std::string& safe_form);

}  // namespace sigtrend::cli

#endif  // SIGTREND_CLI_REPORT_HPP
