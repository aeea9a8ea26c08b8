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

#ifndef SIGTREND_DATAPREP_HPP
#define SIGTREND_DATAPREP_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigtrend/common.hpp"

namespace sigtrend {

struct Point {
  real x;
  real y;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Translation {
  std::vector<Point> points;
  real x_shift = 0;
  real y_shift = 0;
};

/// Shifts the data into the non-negative quadrant. Each shift is the largest
/// magnitude among the negative coordinates on that axis, or 0 if none.
Translation translate_nonneg(std::span<const Point> raw);

enum class DuplicateX {
  reject,  // interpolation: repeated abscissae make the system singular
  warn,    // least squares: repeated measurements are legitimate
};

/// Normalized measurement data: non-negative, sorted by x.
class Dataset {
 public:
  Dataset() = default;

  [[nodiscard]] std::span<const Point> points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  /// Index of the last point, the n of x_0 < ... < x_n.
  [[nodiscard]] std::size_t last_index() const noexcept { return points_.size() - 1; }

  [[nodiscard]] real x_min() const { return points_.front().x; }
  [[nodiscard]] real x_max() const { return points_.back().x; }
  [[nodiscard]] real y_max() const;

  [[nodiscard]] int y_precision() const noexcept { return y_precision_; }
  [[nodiscard]] bool precision_declared() const noexcept { return precision_declared_; }
  [[nodiscard]] real x_shift() const noexcept { return x_shift_; }
  [[nodiscard]] real y_shift() const noexcept { return y_shift_; }

  /// Abscissae that occur more than once (only possible with DuplicateX::warn).
  [[nodiscard]] const std::vector<real>& repeated_x() const noexcept { return repeated_x_; }
  /// Number of distinct abscissae.
  [[nodiscard]] std::size_t distinct_x() const noexcept;

  [[nodiscard]] Dataset with_precision(int p, bool declared = true) const;
  [[nodiscard]] Dataset with_shift(real x_shift, real y_shift) const;

 private:
  friend Dataset sort_validate(std::span<const Point>, DuplicateX);

  std::vector<Point> points_;
  std::vector<real> repeated_x_;
  int y_precision_ = 0;
  bool precision_declared_ = false;
  real x_shift_ = 0;
  real y_shift_ = 0;
};

/// Sorts by x (stable) and checks coordinates are non-negative.
/// With DuplicateX::reject a repeated abscissa throws a DomainError naming it.
Dataset sort_validate(std::span<const Point> shifted,
                      DuplicateX policy = DuplicateX::reject);

/// Finest last-nonzero-digit position over the y values (integers give 0 or
/// more, trailing zeros are not significant). Zeros are skipped; all-zero
/// data gives 0.
int infer_y_precision(std::span<const Point> points);

/// translate_nonneg + sort_validate + precision (declared or inferred).
Dataset prepare(std::span<const Point> raw, std::optional<int> declared_precision,
                DuplicateX policy = DuplicateX::reject);

}  // namespace sigtrend

#endif  // SIGTREND_DATAPREP_HPP
