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

#include "sigtrend/dataprep.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include "sigtrend/decimal.hpp"

namespace sigtrend {

Translation translate_nonneg(std::span<const Point> raw) {
  if (raw.empty()) throw DomainError("empty dataset");
  Translation t;
  for (const auto& p : raw) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw DomainError("non-finite coordinate in dataset");
    }
    if (p.x < 0) t.x_shift = std::max(t.x_shift, -p.x);
    if (p.y < 0) t.y_shift = std::max(t.y_shift, -p.y);
  }
  t.points.reserve(raw.size());
  for (const auto& p : raw) t.points.push_back({p.x + t.x_shift, p.y + t.y_shift});
  return t;
}

real Dataset::y_max() const {
  real m = points_.front().y;
  for (const auto& p : points_) m = std::max(m, p.y);
  return m;
}

std::size_t Dataset::distinct_x() const noexcept {
  std::size_t n = points_.empty() ? 0 : 1;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].x != points_[i - 1].x) ++n;
  }
  return n;
}

Dataset Dataset::with_precision(int p, bool declared) const {
  Dataset d = *this;
  d.y_precision_ = p;
  d.precision_declared_ = declared;
  return d;
}

Dataset Dataset::with_shift(real x_shift, real y_shift) const {
  Dataset d = *this;
  d.x_shift_ = x_shift;
  d.y_shift_ = y_shift;
  return d;
}

Dataset sort_validate(std::span<const Point> shifted, DuplicateX policy) {
  if (shifted.empty()) throw DomainError("empty dataset");
  Dataset d;
  d.points_.assign(shifted.begin(), shifted.end());
  for (const auto& p : d.points_) {
    if (!(p.x >= 0) || !(p.y >= 0)) {
      throw DomainError("coordinates must be non-negative; translate the data first");
    }
  }
  std::stable_sort(d.points_.begin(), d.points_.end(),
                   [](const Point& a, const Point& b) { return a.x < b.x; });

  for (std::size_t i = 1; i < d.points_.size(); ++i) {
    const real x = d.points_[i].x;
    if (x != d.points_[i - 1].x) continue;
    if (policy == DuplicateX::reject) {
      throw DomainError("duplicate abscissa x = " + to_shortest_string(x));
    }
    if (d.repeated_x_.empty() || d.repeated_x_.back() != x) d.repeated_x_.push_back(x);
  }
  return d;
}

int infer_y_precision(std::span<const Point> points) {
  int finest = INT_MAX;
  for (const auto& p : points) {
    if (p.y == 0 || !std::isfinite(p.y)) continue;
    finest = std::min(finest, last_digit_position(p.y));
  }
  if (finest == INT_MAX) return 0;
  return finest;
}

Dataset prepare(std::span<const Point> raw, std::optional<int> declared_precision,
                DuplicateX policy) {
  auto t = translate_nonneg(raw);
  auto d = sort_validate(t.points, policy).with_shift(t.x_shift, t.y_shift);
  if (declared_precision) return d.with_precision(*declared_precision, true);
  // Infer from the values as written; the shift can hide trailing digits.
  return d.with_precision(infer_y_precision(raw), false);
}

}  // namespace sigtrend
