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

#ifndef SIGTREND_DECIMAL_HPP
#define SIGTREND_DECIMAL_HPP

// Decimal-position arithmetic on binary floating point values.
//
// A position p names the power of ten 10^p of a digit. Every value is read
// through its shortest round-trip decimal representation, so 84.3 has first
// digit at 10^1 and last digit at 10^-1 even though the binary value is not
// exactly 84.3.

#include <string>

#include "sigtrend/common.hpp"

namespace sigtrend {

/// Sign, significant digits and decimal exponent of a value:
/// value = (-1)^negative * 0.d1d2d3... * 10^(first_pos + 1).
struct DecimalDigits {
  bool negative = false;
  std::string digits;  // no leading or trailing zeros; empty for zero
  int first_pos = 0;   // position of digits[0]

  [[nodiscard]] bool is_zero() const noexcept { return digits.empty(); }
  [[nodiscard]] int last_pos() const noexcept {
    return first_pos - static_cast<int>(digits.size()) + 1;
  }
};

/// Shortest round-trip decimal digits of a finite value.
DecimalDigits to_decimal_digits(real z);

/// Inverse of to_decimal_digits (correctly rounded).
real from_decimal_digits(const DecimalDigits& d);

/// Shortest round-trip text of a value ("84.3", "1e-09").
std::string to_shortest_string(real z);

/// A value with the positions of its first and last significant digit.
class PositionedNumber {
 public:
  /// Takes last_pos from the shortest representation of `value`.
  explicit PositionedNumber(real value);
  /// Declares precision 10^last_pos; `value` is rounded to that position.
  PositionedNumber(real value, int last_pos);

  [[nodiscard]] real value() const noexcept { return value_; }
  [[nodiscard]] int first_pos() const noexcept { return first_pos_; }
  [[nodiscard]] int last_pos() const noexcept { return last_pos_; }
  /// first_pos - last_pos + 1; 0 for a zero value.
  [[nodiscard]] int significant_digits() const noexcept;

 private:
  real value_;
  int first_pos_;
  int last_pos_;
};

/// Mantissa/exponent split z = mantissa * 10^exponent, 0.1 <= mantissa < 1.
struct Decomposition {
  real mantissa;
  int exponent;
};

/// Throws DomainError unless z is finite and positive.
Decomposition decompose(real z);

/// Nearest integer, exact halves rounded away from zero.
/// Throws DomainError for non-finite x or results outside int.
int nearest_int(real x);

/// r with 10^r <= |z| < 10^(r+1). Throws DomainError for zero or non-finite z.
int first_digit_position(real z);

/// Position of the last nonzero digit of z's shortest decimal form
/// (12000 -> 3, 0.0123 -> -4). Throws DomainError for zero or non-finite z.
int last_digit_position(real z);

/// Rounds z so its last retained digit sits at 10^p, half away from zero.
/// Values below half a unit at 10^p become 0.
real round_to_position(real z, int p);

/// z * 10^shift computed on the decimal digits (exact for the decimal the
/// value prints as).
real shift_decimal(real z, int shift);

/// Digits of z rounded at 10^p (half away from zero). Used where the exact
/// decimal rather than the nearest binary value is needed, e.g. rendering.
DecimalDigits round_digits(const DecimalDigits& z, int p);

}  // namespace sigtrend

#endif  // SIGTREND_DECIMAL_HPP
