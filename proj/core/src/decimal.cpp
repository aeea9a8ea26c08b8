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

#include "sigtrend/decimal.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <system_error>

namespace sigtrend {

namespace {

void require_finite(real z, const char* what) {
  if (!std::isfinite(z)) {
    throw DomainError(std::string(what) + ": value is not finite");
  }
}

}  // namespace

DecimalDigits to_decimal_digits(real z) {
  require_finite(z, "to_decimal_digits");
  DecimalDigits out;
  if (z == 0) return out;

  std::array<char, 80> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), z,
                           std::chars_format::scientific);
  if (res.ec != std::errc{}) {
    throw DomainError("to_decimal_digits: formatting failed");
  }
  // Form: [-]d[.ddd]e(+|-)xx
  const char* p = buf.data();
  const char* end = res.ptr;
  if (*p == '-') {
    out.negative = true;
    ++p;
  }
  for (; p != end && *p != 'e'; ++p) {
    if (*p != '.') out.digits.push_back(*p);
  }
  int exponent = 0;
  ++p;  // 'e'
  if (p != end && *p == '+') ++p;
  std::from_chars(p, end, exponent);
  out.first_pos = exponent;

  while (!out.digits.empty() && out.digits.back() == '0') out.digits.pop_back();
  return out;
}

real from_decimal_digits(const DecimalDigits& d) {
  if (d.is_zero()) return 0;
  std::string text;
  text.reserve(d.digits.size() + 16);
  if (d.negative) text.push_back('-');
  text.push_back(d.digits.front());
  if (d.digits.size() > 1) {
    text.push_back('.');
    text.append(d.digits, 1);
  }
  text.push_back('e');
  text += std::to_string(d.first_pos);

  real value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec == std::errc::result_out_of_range) {
    // Underflow to zero or overflow; from_chars leaves value untouched.
    return d.first_pos < 0 ? (d.negative ? -0.0L : 0.0L)
                           : (d.negative ? -std::numeric_limits<real>::infinity()
                                         : std::numeric_limits<real>::infinity());
  }
  return value;
}

std::string to_shortest_string(real z) {
  std::array<char, 80> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), z);
  return std::string(buf.data(), res.ptr);
}

PositionedNumber::PositionedNumber(real value) : value_(value) {
  auto d = to_decimal_digits(value);
  first_pos_ = d.is_zero() ? 0 : d.first_pos;
  last_pos_ = d.is_zero() ? 0 : d.last_pos();
}

PositionedNumber::PositionedNumber(real value, int last_pos)
    : value_(round_to_position(value, last_pos)), last_pos_(last_pos) {
  first_pos_ = value_ == 0 ? last_pos : first_digit_position(value_);
}

int PositionedNumber::significant_digits() const noexcept {
  return value_ == 0 ? 0 : first_pos_ - last_pos_ + 1;
}

Decomposition decompose(real z) {
  require_finite(z, "decompose");
  if (z <= 0) throw DomainError("decompose: value must be positive");
  auto d = to_decimal_digits(z);
  const int exponent = d.first_pos + 1;
  d.first_pos = -1;
  return {from_decimal_digits(d), exponent};
}

int nearest_int(real x) {
  require_finite(x, "nearest_int");
  const real r = std::round(x);  // halves away from zero
  if (r > std::numeric_limits<int>::max() || r < std::numeric_limits<int>::min()) {
    throw DomainError("nearest_int: result does not fit an int");
  }
  return static_cast<int>(r);
}

int first_digit_position(real z) {
  require_finite(z, "first_digit_position");
  if (z == 0) throw DomainError("first_digit_position: zero has no first digit");
  return to_decimal_digits(z).first_pos;
}

int last_digit_position(real z) {
  require_finite(z, "last_digit_position");
  if (z == 0) throw DomainError("last_digit_position: zero has no last digit");
  return to_decimal_digits(z).last_pos();
}

DecimalDigits round_digits(const DecimalDigits& z, int p) {
  if (z.is_zero() || z.last_pos() >= p) return z;

  DecimalDigits out;
  out.negative = z.negative;
  const long keep = static_cast<long>(z.first_pos) - p + 1;
  if (keep < 0) return DecimalDigits{};  // below 10^(p-1): rounds to zero

  std::string digits = z.digits.substr(0, static_cast<std::size_t>(keep));
  const bool up = z.digits[static_cast<std::size_t>(keep)] >= '5';
  int first = z.first_pos;
  if (up) {
    long i = keep - 1;
    for (; i >= 0; --i) {
      if (digits[static_cast<std::size_t>(i)] == '9') {
        digits[static_cast<std::size_t>(i)] = '0';
      } else {
        ++digits[static_cast<std::size_t>(i)];
        break;
      }
    }
    if (i < 0) {
      digits.insert(digits.begin(), '1');
      ++first;
    }
  }
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  if (digits.empty()) return DecimalDigits{};
  out.digits = std::move(digits);
  out.first_pos = first;
  return out;
}

real shift_decimal(real z, int shift) {
  auto d = to_decimal_digits(z);
  if (d.is_zero()) return z;
  d.first_pos += shift;
  return from_decimal_digits(d);
}

real round_to_position(real z, int p) {
  require_finite(z, "round_to_position");
  return from_decimal_digits(round_digits(to_decimal_digits(z), p));
}

}  // namespace sigtrend
