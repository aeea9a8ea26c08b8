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

#ifndef SIGTREND_POLYFIT_HPP
#define SIGTREND_POLYFIT_HPP

#include <optional>
#include <span>
#include <vector>

#include "sigtrend/common.hpp"
#include "sigtrend/dataprep.hpp"

namespace sigtrend {

/// Which sum of squares R² is normalized by.
enum class RSquaredBasis {
  /// 1 - SS_res / sum (yhat_i - ybar)^2. Reproduces the values reported by
  /// common spreadsheet and statistics packages; default.
  regression_sum,
  /// 1 - SS_res / sum (y_i - ybar)^2, the textbook definition.
  total_sum,
};

struct FitOptions {
  RSquaredBasis r_squared_basis = RSquaredBasis::regression_sum;
};

class Polynomial;
Polynomial fit(const Dataset& data, int degree, FitOptions options);

struct Domain {
  real lo = 0;
  real hi = 0;
};

/// y(x) = sum a_k x^k with full-precision coefficients.
class Polynomial {
 public:
  Polynomial() : coefficients_{0} {}
  explicit Polynomial(std::vector<real> coefficients, Domain domain = {},
                      std::optional<real> r_squared = std::nullopt);

  [[nodiscard]] int degree() const noexcept {
    return static_cast<int>(coefficients_.size()) - 1;
  }
  [[nodiscard]] std::span<const real> coefficients() const noexcept { return coefficients_; }
  [[nodiscard]] real coefficient(int k) const { return coefficients_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] Domain domain() const noexcept { return domain_; }
  /// Absent for interpolation, where it is identically 1.
  [[nodiscard]] std::optional<real> r_squared() const noexcept { return r_squared_; }
  /// 2-norm condition number of the column-equilibrated Vandermonde matrix
  /// the coefficients were solved from; 1 for user-supplied coefficients.
  [[nodiscard]] real condition_estimate() const noexcept { return condition_estimate_; }
  /// First-order bound on the absolute solver error in a_k (0 when the
  /// coefficients were supplied rather than fitted).
  [[nodiscard]] real coefficient_error(int k) const;

  [[nodiscard]] bool extrapolates(real x) const noexcept {
    return x < domain_.lo || x > domain_.hi;
  }

 private:
  std::vector<real> coefficients_;
  Domain domain_;
  std::optional<real> r_squared_;
  real condition_estimate_ = 1;
  std::vector<real> errors_;

  friend Polynomial fit(const Dataset&, int, FitOptions);
};

/// Least-squares polynomial of degree d (the interpolant when d = n).
/// Throws DomainError if d < 0 or d > n, ConditioningError if the
/// Vandermonde system is numerically rank deficient.
Polynomial fit(const Dataset& data, int degree, FitOptions options = FitOptions{});

/// Horner evaluation.
real evaluate(std::span<const real> coefficients, real x);
inline real evaluate(const Polynomial& poly, real x) {
  return evaluate(poly.coefficients(), x);
}

/// Coefficient of determination of a model on the data. May be negative.
/// Throws DomainError when the normalizing sum of squares is zero.
real r_squared(const Dataset& data, std::span<const real> coefficients,
               RSquaredBasis basis = RSquaredBasis::regression_sum);
inline real r_squared(const Dataset& data, const Polynomial& poly,
                      RSquaredBasis basis = RSquaredBasis::regression_sum) {
  return r_squared(data, poly.coefficients(), basis);
}

}  // namespace sigtrend

#endif  // SIGTREND_POLYFIT_HPP
