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

#include "sigtrend/verify.hpp"

#include <cmath>

namespace sigtrend {

ModelColumn column(std::string label, const Polynomial& poly) {
  return {std::move(label), {poly.coefficients().begin(), poly.coefficients().end()}};
}

ModelColumn column(std::string label, const RoundedPolynomial& poly) {
  return {std::move(label), {poly.coefficients().begin(), poly.coefficients().end()}};
}

VerificationReport residual_table(const Dataset& data, std::span<const ModelColumn> models,
                                  RSquaredBasis basis) {
  VerificationReport report;
  for (const auto& m : models) {
    report.labels.push_back(m.label);
    try {
      report.r_squared.emplace_back(r_squared(data, m.coefficients, basis));
    } catch (const DomainError&) {
      report.r_squared.emplace_back(std::nullopt);
    }
  }
  for (const auto& p : data.points()) {
    ResidualRow row{p.x, p.y, {}};
    row.residuals.reserve(models.size());
    for (const auto& m : models) row.residuals.push_back(std::fabs(p.y - evaluate(m.coefficients, p.x)));
    report.rows.push_back(std::move(row));
  }
  return report;
}

OptimalityCheck check_optimality(const Dataset& data, const Polynomial& full,
                                 const RoundedPolynomial& rounded) {
  const auto& plan = rounded.plan();
  OptimalityCheck check;
  check.bound = static_cast<real>(rounded.degree() + 1) * 0.5L *
                std::pow(10.0L, static_cast<real>(plan.precision + plan.effective_offset()));
  auto pts = data.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const real dev = std::fabs(evaluate(rounded.coefficients(), pts[i].x) - evaluate(full, pts[i].x));
    if (dev > check.max_deviation || i == 0) {
      check.max_deviation = dev;
      check.worst_point = i;
    }
  }
  check.pass = check.max_deviation < check.bound;
  return check;
}

RSquaredComparison compare_r_squared(const Dataset& data, const Polynomial& full,
                                     const RoundedPolynomial& rounded, RSquaredBasis basis) {
  if (static_cast<std::size_t>(full.degree()) >= data.last_index()) {
    throw DomainError("R^2 comparison needs a least-squares fit (d < n); interpolation has R^2 = 1");
  }
  RSquaredComparison c;
  c.full = r_squared(data, full, basis);
  c.rounded = r_squared(data, rounded.coefficients(), basis);
  c.delta = std::fabs(c.full - c.rounded);
  return c;
}

VerificationReport verify(const Dataset& data, const Polynomial& full,
                          const RoundedPolynomial& rounded, RSquaredBasis basis) {
  const ModelColumn cols[] = {column("full", full), column("rounded", rounded)};
  auto report = residual_table(data, cols, basis);
  report.optimality = check_optimality(data, full, rounded);
  return report;
}

}  // namespace sigtrend
