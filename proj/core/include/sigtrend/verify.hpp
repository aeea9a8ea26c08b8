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

#ifndef SIGTREND_VERIFY_HPP
#define SIGTREND_VERIFY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigtrend/common.hpp"
#include "sigtrend/dataprep.hpp"
#include "sigtrend/polyfit.hpp"
#include "sigtrend/sigdigits.hpp"

namespace sigtrend {

/// A labelled coefficient vector, one column of a residual table.
struct ModelColumn {
  std::string label;
  std::vector<real> coefficients;
};

ModelColumn column(std::string label, const Polynomial& poly);
ModelColumn column(std::string label, const RoundedPolynomial& poly);

struct ResidualRow {
  real x = 0;
  real y = 0;
  std::vector<real> residuals;  // |y - model(x)|, one per column
};

struct OptimalityCheck {
  bool pass = false;
  real max_deviation = 0;  // max_i |rounded(x_i) - full(x_i)|
  std::size_t worst_point = 0;
  real bound = 0;          // (d + 1) * 0.5 * 10^(P + B)
};

struct VerificationReport {
  std::vector<std::string> labels;
  std::vector<ResidualRow> rows;
  std::vector<std::optional<real>> r_squared;  // per column; empty if undefined
  std::optional<OptimalityCheck> optimality;
};

/// Absolute residuals of every model at every data point, plus per-model R².
VerificationReport residual_table(const Dataset& data, std::span<const ModelColumn> models,
                                  RSquaredBasis basis = RSquaredBasis::regression_sum);

/// Largest pointwise change rounding caused, judged against the accumulated
/// half-unit bound (d + 1) * 0.5 * 10^(P + B), B = 0 for interpolation.
OptimalityCheck check_optimality(const Dataset& data, const Polynomial& full,
                                 const RoundedPolynomial& rounded);

struct RSquaredComparison {
  real full = 0;
  real rounded = 0;
  real delta = 0;
};

/// Throws DomainError in interpolation mode (d = n), where R² is 1.
RSquaredComparison compare_r_squared(const Dataset& data, const Polynomial& full,
                                     const RoundedPolynomial& rounded,
                                     RSquaredBasis basis = RSquaredBasis::regression_sum);

/// Residual table over (full, rounded) plus the optimality check.
VerificationReport verify(const Dataset& data, const Polynomial& full,
                          const RoundedPolynomial& rounded,
                          RSquaredBasis basis = RSquaredBasis::regression_sum);

}  // namespace sigtrend

#endif  // SIGTREND_VERIFY_HPP
