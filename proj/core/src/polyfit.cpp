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

#include "sigtrend/polyfit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <string>

namespace sigtrend {

namespace {

using Matrix = Eigen::Matrix<real, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<real, Eigen::Dynamic, 1>;

// A condition number at which fewer than one digit of the scaled solution
// can be trusted.
constexpr real kSingularCondition = 0.1L / std::numeric_limits<real>::epsilon();

}  // namespace

Polynomial::Polynomial(std::vector<real> coefficients, Domain domain,
                       std::optional<real> r_squared)
    : coefficients_(std::move(coefficients)), domain_(domain), r_squared_(r_squared) {
  if (coefficients_.empty()) coefficients_.push_back(0);
}

real Polynomial::coefficient_error(int k) const {
  if (errors_.empty()) return 0;
  return errors_.at(static_cast<std::size_t>(k));
}

Polynomial fit(const Dataset& data, int degree, FitOptions options) {
  if (data.size() == 0) throw DomainError("empty dataset");
  const auto n = static_cast<long>(data.last_index());
  if (degree < 0) throw DomainError("degree must be non-negative");
  if (degree > n) {
    throw DomainError("degree " + std::to_string(degree) + " exceeds n = " +
                      std::to_string(n) + " (need at least d+1 points)");
  }
  const auto rows = static_cast<Eigen::Index>(data.size());
  const auto cols = static_cast<Eigen::Index>(degree + 1);
  auto pts = data.points();

  Matrix v(rows, cols);
  Vector y(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const real x = pts[static_cast<std::size_t>(i)].x;
    real power = 1;
    for (Eigen::Index k = 0; k < cols; ++k) {
      v(i, k) = power;
      power *= x;
    }
    y(i) = pts[static_cast<std::size_t>(i)].y;
  }

  // Equilibrate columns; x^k spans many orders of magnitude otherwise.
  Vector scale(cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    const real norm = v.col(k).norm();
    scale(k) = norm > 0 ? norm : 1;
    v.col(k) /= scale(k);
  }

  Eigen::JacobiSVD<Matrix> svd(v);
  const auto& sv = svd.singularValues();
  const real smallest = sv(sv.size() - 1);
  const real condition = smallest > 0 ? sv(0) / smallest : std::numeric_limits<real>::infinity();

  Eigen::ColPivHouseholderQR<Matrix> qr(v);
  if (qr.rank() < cols || !(condition < kSingularCondition)) {
    throw ConditioningError(
        degree, "degree " + std::to_string(degree) +
                    " Vandermonde system is numerically singular (condition ~" +
                    std::to_string(static_cast<double>(condition)) + ")");
  }
  const Vector scaled = qr.solve(y);
  const Vector residual = y - v * scaled;

  const real eps = std::numeric_limits<real>::epsilon();
  const real bnorm = scaled.norm();
  const real vnorm = sv(0);
  real relative = eps * condition;
  if (bnorm > 0 && vnorm > 0) {
    relative += eps * condition * condition * residual.norm() / (vnorm * bnorm);
  }

  std::vector<real> coeffs(static_cast<std::size_t>(cols));
  std::vector<real> errors(static_cast<std::size_t>(cols));
  for (Eigen::Index k = 0; k < cols; ++k) {
    coeffs[static_cast<std::size_t>(k)] = scaled(k) / scale(k);
    errors[static_cast<std::size_t>(k)] = relative * bnorm / scale(k);
  }

  std::optional<real> r2;
  if (degree < n) {
    try {
      r2 = r_squared(data, coeffs, options.r_squared_basis);
    } catch (const DomainError&) {
      r2.reset();  // constant data or constant model
    }
  }

  Polynomial poly(std::move(coeffs), Domain{data.x_min(), data.x_max()}, r2);
  poly.condition_estimate_ = condition;
  poly.errors_ = std::move(errors);
  return poly;
}

real evaluate(std::span<const real> coefficients, real x) {
  real acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

real r_squared(const Dataset& data, std::span<const real> coefficients,
               RSquaredBasis basis) {
  auto pts = data.points();
  if (pts.empty()) throw DomainError("empty dataset");
  real mean = 0;
  for (const auto& p : pts) mean += p.y;
  mean /= static_cast<real>(pts.size());

  real ss_res = 0;
  real ss_tot = 0;
  real ss_reg = 0;
  for (const auto& p : pts) {
    const real fitted = evaluate(coefficients, p.x);
    ss_res += (p.y - fitted) * (p.y - fitted);
    ss_tot += (p.y - mean) * (p.y - mean);
    ss_reg += (fitted - mean) * (fitted - mean);
  }
  if (ss_tot == 0) throw DomainError("R^2 undefined: all y values are identical");
  const real denom = basis == RSquaredBasis::total_sum ? ss_tot : ss_reg;
  if (denom == 0) throw DomainError("R^2 undefined: model is constant at the mean of y");
  return 1 - ss_res / denom;
}

}  // namespace sigtrend
