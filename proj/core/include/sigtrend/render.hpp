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

#ifndef SIGTREND_RENDER_HPP
#define SIGTREND_RENDER_HPP

#include <string>
#include <string_view>

#include "sigtrend/common.hpp"
#include "sigtrend/sigdigits.hpp"

namespace sigtrend {

enum class EquationStyle {
  scientific,  // mantissa*10^m where the plain form would need padding zeros
  decimal,     // plain decimals throughout
};

/// Magnitude of a rounded value written with exactly the digits down to
/// 10^last_pos, e.g. (0.32270, -5) -> "0.32270", (9370, 1) -> "9.37e3" in
/// scientific style and "9370" in decimal style.
std::string format_coefficient(real value, int last_pos, EquationStyle style);

/// "-8.5161e-9*x^6 + ... + 4.109*x": descending powers, dropped terms
/// omitted, "0" for the zero polynomial. The text parses to the same value
/// under both precedence regimes.
std::string render_equation(const RoundedPolynomial& poly,
                            EquationStyle style = EquationStyle::scientific,
                            std::string_view variable = "x");

}  // namespace sigtrend

#endif  // SIGTREND_RENDER_HPP
