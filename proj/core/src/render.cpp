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

#include "sigtrend/render.hpp"

#include <cmath>

#include "sigtrend/decimal.hpp"

namespace sigtrend {

namespace {

bool plain_in_scientific(int first_pos, int last_pos) {
  return first_pos >= -2 && first_pos <= 5 && last_pos <= 0;
}

}  // namespace

std::string format_coefficient(real value, int last_pos, EquationStyle style) {
  auto d = round_digits(to_decimal_digits(std::fabs(value)), last_pos);
  if (d.is_zero()) return "0";
  // Pad with zeros down to the planned position; they are significant.
  const int first = d.first_pos;
  const int last = std::min(last_pos, first);
  std::string digits = d.digits;
  digits.resize(static_cast<std::size_t>(first - last + 1), '0');

  const bool plain = style == EquationStyle::decimal || plain_in_scientific(first, last);
  if (!plain) {
    std::string out(1, digits.front());
    if (digits.size() > 1) {
      out.push_back('.');
      out.append(digits, 1);
    }
    return out + "e" + std::to_string(first);
  }

  std::string out;
  if (first < 0) {
    out = "0.";
    out.append(static_cast<std::size_t>(-first - 1), '0');
    out += digits;
    return out;
  }
  // Integer part spans positions first..0.
  const std::size_t int_len = static_cast<std::size_t>(first + 1);
  if (digits.size() <= int_len) {
    out = digits;
    out.append(int_len - digits.size(), '0');
    return out;
  }
  out = digits.substr(0, int_len) + "." + digits.substr(int_len);
  return out;
}

std::string render_equation(const RoundedPolynomial& poly, EquationStyle style,
                            std::string_view variable) {
  std::string out;
  const auto& positions = poly.plan().positions;
  for (int k = poly.degree(); k >= 0; --k) {
    const real a = poly.coefficient(k);
    if (a == 0) continue;
    const int p = static_cast<std::size_t>(k) < positions.size()
                      ? positions[static_cast<std::size_t>(k)]
                      : last_digit_position(a);
    std::string term = format_coefficient(a, std::min(p, last_digit_position(a)), style);
    if (k >= 1) {
      term += "*";
      term += variable;
      if (k >= 2) term += "^" + std::to_string(k);
    }
    if (out.empty()) {
      out = (a < 0 ? "-" : "") + term;
    } else {
      out += (a < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace sigtrend
