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

#include "sigtrend/sigdigits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sigtrend/decimal.hpp"

namespace sigtrend {

std::optional<int> compute_fit_offset(real r_squared, real y_max) {
  if (!std::isfinite(r_squared) || !std::isfinite(y_max)) {
    throw DomainError("compute_fit_offset: non-finite input");
  }
  if (y_max <= 0) throw DomainError("compute_fit_offset: y_max must be positive");
  if (r_squared >= 1) return std::nullopt;
  const real spread = (1 - r_squared) * y_max;
  if (!(spread > 0) || !std::isfinite(spread)) return std::nullopt;
  return first_digit_position(spread);
}

PrecisionPlan plan(int precision, int degree, real x_max, std::optional<int> fit_offset) {
  if (degree < 0) throw DomainError("plan: degree must be non-negative");
  if (!std::isfinite(x_max) || x_max <= 0) {
    throw DomainError("plan: x_max must be positive; normalize the data first");
  }
  const auto [mantissa, exponent] = decompose(x_max);
  const real log_mantissa = std::log10(mantissa);

  PrecisionPlan p;
  p.declared_precision = precision;
  p.precision = precision;
  p.fit_offset = fit_offset;
  p.mode = fit_offset ? PlanMode::fitting : PlanMode::interpolation;
  p.x_max = x_max;
  p.mantissa = mantissa;
  p.exponent = exponent;
  const real base = static_cast<real>(precision - 1 + fit_offset.value_or(0));
  for (int k = 0; k <= degree; ++k) {
    const real raw = base - static_cast<real>(k) * exponent - static_cast<real>(k) * log_mantissa;
    p.raw_positions.push_back(raw);
    p.positions.push_back(nearest_int(raw));
  }
  return p;
}

PrecisionPlan coarsen(const PrecisionPlan& original, int output_precision) {
  if (output_precision < original.declared_precision) {
    throw DomainError("output precision 10^" + std::to_string(output_precision) +
                      " is finer than the data precision 10^" +
                      std::to_string(original.declared_precision));
  }
  auto p = plan(output_precision, original.degree(), original.x_max, original.fit_offset);
  p.declared_precision = original.declared_precision;
  return p;
}

PrecisionPlan rescale_positions(const PrecisionPlan& original, UnitScale units) {
  PrecisionPlan p = original;
  p.declared_precision += units.y;
  p.precision += units.y;
  p.exponent += units.x;
  p.x_max = original.x_max * std::pow(10.0L, static_cast<real>(units.x));
  for (std::size_t k = 0; k < p.positions.size(); ++k) {
    const int shift = units.y - static_cast<int>(k) * units.x;
    p.positions[k] += shift;
    p.raw_positions[k] += static_cast<real>(shift);
  }
  return p;
}

RoundedPolynomial::RoundedPolynomial(std::vector<real> coefficients, PrecisionPlan plan)
    : coefficients_(std::move(coefficients)), plan_(std::move(plan)) {
  if (coefficients_.empty()) coefficients_.push_back(0);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] == 0) dropped_.push_back(static_cast<int>(k));
  }
}

bool RoundedPolynomial::dropped(int k) const {
  return std::find(dropped_.begin(), dropped_.end(), k) != dropped_.end();
}

RoundedPolynomial round_coefficients(const Polynomial& poly, const PrecisionPlan& plan) {
  if (poly.degree() != plan.degree()) {
    throw DomainError("plan degree " + std::to_string(plan.degree()) +
                      " does not match polynomial degree " + std::to_string(poly.degree()));
  }
  std::vector<real> rounded;
  rounded.reserve(plan.positions.size());
  for (int k = 0; k <= poly.degree(); ++k) {
    // Normalize -0 so dropped terms compare and print as plain 0.
    const real r = round_to_position(poly.coefficient(k), plan.positions[static_cast<std::size_t>(k)]);
    rounded.push_back(r == 0 ? 0 : r);
  }
  return RoundedPolynomial(std::move(rounded), plan);
}

void check_conditioning(const Polynomial& poly, const PrecisionPlan& plan) {
  for (int k = 0; k <= std::min(poly.degree(), plan.degree()); ++k) {
    const real unit = std::pow(10.0L, static_cast<real>(plan.positions[static_cast<std::size_t>(k)]));
    const real err = poly.coefficient_error(k);
    if (err > 0.1L * unit) {
      throw ConditioningError(
          poly.degree(),
          "degree " + std::to_string(poly.degree()) + " fit: coefficient a" +
              std::to_string(k) + " is only known to about " + to_shortest_string(err) +
              " but the precision plan asks for 10^" +
              std::to_string(plan.positions[static_cast<std::size_t>(k)]));
    }
  }
}

}  // namespace sigtrend
