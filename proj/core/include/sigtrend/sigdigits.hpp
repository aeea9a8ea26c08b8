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

#ifndef SIGTREND_SIGDIGITS_HPP
#define SIGTREND_SIGDIGITS_HPP

// Optimal significant-digit positions for polynomial trend coefficients.
//
// With measured y known to 10^P and the largest abscissa written as
// x_n = c * 10^E (0.1 <= c < 1), coefficient a_k is reported down to
//
//   p_k = [P - 1 + B - k*E - k*log10(c)]
//
// where [.] is the nearest integer and B (least squares only) is the first
// digit position of (1 - R^2) * y_max. Every addend a_k x^k is then known to
// 10^(P-1+B) at the largest abscissa, which dominates the error of the others.

#include <optional>
#include <span>
#include <vector>

#include "sigtrend/common.hpp"
#include "sigtrend/polyfit.hpp"

namespace sigtrend {

enum class PlanMode { interpolation, fitting };

struct PrecisionPlan {
  int declared_precision = 0;  // P of the measured data
  int precision = 0;           // P actually used (>= declared when coarsened)
  std::optional<int> fit_offset;  // B; present iff mode == fitting
  real x_max = 0;
  real mantissa = 0;  // c in x_max = c * 10^exponent
  int exponent = 0;
  std::vector<real> raw_positions;  // P - 1 + B - k*E - k*log10(c)
  std::vector<int> positions;       // nearest integers of raw_positions
  PlanMode mode = PlanMode::interpolation;

  [[nodiscard]] int degree() const noexcept {
    return static_cast<int>(positions.size()) - 1;
  }
  /// B, or 0 in interpolation mode.
  [[nodiscard]] int effective_offset() const noexcept { return fit_offset.value_or(0); }
};

/// First digit position of (1 - R^2) * y_max; std::nullopt when R^2 >= 1 or
/// the product underflows, meaning the interpolation form applies.
/// Throws DomainError for y_max <= 0 or non-finite input.
std::optional<int> compute_fit_offset(real r_squared, real y_max);

/// Throws DomainError for x_max <= 0 or degree < 0.
PrecisionPlan plan(int precision, int degree, real x_max,
                   std::optional<int> fit_offset = std::nullopt);

/// Recomputes the plan for a coarser output precision (user choice).
/// Throws DomainError if output_precision < plan.declared_precision.
PrecisionPlan coarsen(const PrecisionPlan& plan, int output_precision);

/// Data expressed in units of 10^x and 10^y.
struct UnitScale {
  int x = 0;
  int y = 0;
};

/// Positions for the same data expressed in units of 1, given positions for
/// data in units of 10^units.x, 10^units.y: p_k + u_y - k*u_x.
PrecisionPlan rescale_positions(const PrecisionPlan& plan, UnitScale units);

/// Coefficients rounded to a plan; zero terms are kept in the dense vector.
class RoundedPolynomial {
 public:
  RoundedPolynomial() : coefficients_{0} {}

  /// Takes coefficients as given (e.g. a third-party display) together with
  /// the plan they are judged against.
  RoundedPolynomial(std::vector<real> coefficients, PrecisionPlan plan);

  [[nodiscard]] int degree() const noexcept {
    return static_cast<int>(coefficients_.size()) - 1;
  }
  [[nodiscard]] std::span<const real> coefficients() const noexcept { return coefficients_; }
  [[nodiscard]] real coefficient(int k) const { return coefficients_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] const PrecisionPlan& plan() const noexcept { return plan_; }
  [[nodiscard]] const std::vector<int>& dropped_terms() const noexcept { return dropped_; }
  [[nodiscard]] bool dropped(int k) const;

 private:
  std::vector<real> coefficients_;
  PrecisionPlan plan_;
  std::vector<int> dropped_;
};

/// Rounds a_k to 10^p_k (half away from zero).
/// Throws DomainError if the degrees differ.
RoundedPolynomial round_coefficients(const Polynomial& poly, const PrecisionPlan& plan);

/// Throws ConditioningError when the solver error bound of some fitted a_k
/// exceeds a tenth of a unit at the position the plan asks for.
void check_conditioning(const Polynomial& poly, const PrecisionPlan& plan);

}  // namespace sigtrend

#endif  // SIGTREND_SIGDIGITS_HPP
