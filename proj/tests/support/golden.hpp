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

// Reference datasets and published coefficient displays shared by the unit
// and acceptance tests. Coefficients are listed a_0 first.

#ifndef SIGTREND_TESTS_GOLDEN_HPP
#define SIGTREND_TESTS_GOLDEN_HPP

#include <array>
#include <vector>

#include "sigtrend/dataprep.hpp"

namespace golden {

using sigtrend::Point;
using sigtrend::real;

// Averaged pear contour, interpolated with degree 6 at P = 0.
inline const std::vector<Point> kPear{{0, 0},      {14.5L, 27.4L}, {29, 32.1L}, {44.5L, 28.9L},
                                      {60, 21.5L}, {72.2L, 18.3L}, {84.3L, 0}};

// Six-significant-digit display of the pear interpolant.
inline const std::vector<real> kPearSixDigits{-5.35881e-13L, 4.10924L,      -0.251775L,    9.21349e-3L,
                                              -1.94089e-4L,  2.06269e-6L, -8.51613e-9L};
// Optimal display; the constant term is dropped.
inline const std::vector<real> kPearOptimal{0,           4.109L,       -0.25178L,  9.2135e-3L,
                                            -1.94089e-4L, 2.06269e-6L, -8.5161e-9L};
// Spreadsheet trend-line default display.
inline const std::vector<real> kPearSpreadsheet{-4e-9L, 4.1092L, -0.2518L, 0.0092L, -0.0002L, 2e-6L, -9e-9L};

// Employees (thousands) vs benefit cost (millions), degree 5, P = -1.
inline const std::vector<Point> kEmployees{{2, 11.2L},  {5, 36.8L},   {10, 73.4L},
                                           {25, 140.2L}, {28, 148.4L}, {33, 171.6L}};
inline const std::vector<real> kEmployeesOptimal{-8.11L,       10.2335L,     -0.32270L,
                                                 0.0181062L,   -7.8829e-4L, 1.22036e-5L};
inline const std::vector<int> kEmployeesPositions{-2, -4, -5, -7, -8, -10};
// Same data in units of 1.
inline const std::vector<int> kEmployeesUnitPositions{4, -1, -5, -10, -14, -19};
inline const std::vector<real> kEmployeesUnitOptimal{-8110000,         10233.5L,          -0.32270L,
                                                     0.0181062e-3L,    -7.8829e-10L,      1.22036e-14L};

// Cost series, cubic least squares at P = 0.
inline const std::vector<Point> kSeries = [] {
  const std::array<real, 27> y{10254, 7577,  9723,  5652,  11310, 19921, 17800, 25995, 36580,
                               34186, 44601, 49305, 62692, 63541, 68413, 76650, 84247, 88477,
                               84852, 94884, 89480, 88259, 86899, 84281, 76709, 73854, 58270};
  std::vector<Point> pts;
  for (std::size_t i = 0; i < y.size(); ++i) pts.push_back({static_cast<real>(i) * 100, y[i]});
  return pts;
}();

inline const std::vector<real> kSeriesSixDigits{9372.5L, -22.2732L, 0.0838132L, -0.260884e-4L};
inline const std::vector<real> kSeriesOptimal{9370, -22.27L, 0.083813L, -0.26088e-4L};
inline const std::vector<real> kSeriesSpreadsheet{9372.5L, -22.273L, 0.0838L, -3e-5L};
inline const std::vector<real> kSeriesFiveDigits{9372.5L, -22.273L, 0.083813L, -0.26088e-4L};
inline const std::vector<int> kSeriesPositions{1, -2, -6, -9};

// Published |y_i - model(x_i)| columns for kSeries.
inline const std::vector<real> kSeriesResidualsSpreadsheet{
    881.5,   376.2,   1693.1,  3770.6,  641.3,   4485.0,  1896.7,  1441.6,  6753.9,
    1148.8,  3701.5,  2964.8,  11215.1, 7411.4,  8294.7,  13387.0, 18863.3, 22176.6,
    19018.9, 31082.2, 29453.5, 33931.8, 40375.1, 47844.4, 52823.7, 65164.0, 67599.3};
inline const std::vector<real> kSeriesResidualsFiveDigits{
    881.5,  380.2,  1661.3, 3877.4, 893.7,  3992.8, 2746.4, 93.4,   4742.6,
    4011.2, 223.5,  2257.8, 4436.4, 1205.2, 2465.3, 154.8,  2806.5, 2919.4,
    3838.0, 4202.9, 1894.5, 2354.6, 1342.8, 178.3,  1330.7, 3957.8, 1245.9};
inline const std::vector<real> kSeriesResidualsSixDigits{
    881.5,  380.2,  1661.3, 3877.3, 893.7,  3992.8, 2746.2, 93.6,   4742.9,
    4010.9, 223.1,  2257.3, 4437.1, 1204.4, 2464.3, 156.0,  2807.9, 2921.1,
    3836.0, 4205.3, 1891.7, 2351.3, 1339.1, 182.6,  1325.8, 3963.2, 1239.7};
inline const std::vector<real> kSeriesResidualsOptimal{
    882.0,  379.7,  1661.8, 3876.9, 893.3,  3993.2, 2745.9, 94.0,   4743.2,
    4010.6, 222.8,  2257.0, 4437.4, 1204.2, 2464.1, 156.2,  2808.0, 2921.3,
    3835.8, 4205.4, 1891.6, 2351.2, 1339.0, 182.6,  1325.8, 3963.2, 1239.7};

// Published R^2 in percent.
inline constexpr real kR2Spreadsheet = 10.2172L;
inline constexpr real kR2FiveDigits = 99.2302L;
inline constexpr real kR2SixDigits = 99.2301L;
inline constexpr real kR2Optimal = 99.2303L;

}  // namespace golden

#endif  // SIGTREND_TESTS_GOLDEN_HPP
