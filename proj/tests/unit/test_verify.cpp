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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "golden.hpp"
#include "sigtrend/verify.hpp"

using namespace sigtrend;

namespace {

const Dataset& series() {
  static const Dataset d = prepare(golden::kSeries, 0);
  return d;
}

const PrecisionPlan& series_plan() {
  static const PrecisionPlan p = plan(0, 3, 2600, 2);
  return p;
}

}  // namespace

TEST_CASE("residual_table") {
  const std::vector<ModelColumn> cols{{"E", golden::kSeriesSpreadsheet}, {"T", golden::kSeriesFiveDigits},
                                      {"A", golden::kSeriesOptimal}};
  const auto report = residual_table(series(), cols);
  REQUIRE(report.rows.size() == 27);
  CHECK(report.labels == std::vector<std::string>{"E", "T", "A"});
  SUBCASE("published spreadsheet and five-digit columns") {
    // Published to one decimal, so half a unit of slack.
    for (std::size_t i = 0; i < 27; ++i) {
      CHECK(std::fabs(report.rows[i].residuals[0] - golden::kSeriesResidualsSpreadsheet[i]) <= 0.05L + 1e-9L);
      CHECK(std::fabs(report.rows[i].residuals[1] - golden::kSeriesResidualsFiveDigits[i]) <= 0.05L + 1e-9L);
    }
  }
  SUBCASE("optimal column from the displayed coefficients") {
    CHECK(report.rows[0].residuals[2] == doctest::Approx(884.0));
    CHECK(report.rows[7].residuals[2] == doctest::Approx(93.814));
  }
  SUBCASE("R^2 per column") {
    REQUIRE(report.r_squared.size() == 3);
    CHECK(100 * *report.r_squared[0] == doctest::Approx(static_cast<double>(golden::kR2Spreadsheet)).epsilon(5e-6));
    CHECK(100 * *report.r_squared[1] == doctest::Approx(static_cast<double>(golden::kR2FiveDigits)).epsilon(5e-6));
    CHECK(100 * *report.r_squared[2] == doctest::Approx(static_cast<double>(golden::kR2Optimal)).epsilon(5e-6));
  }
  for (const auto& row : report.rows) {
    for (real r : row.residuals) CHECK(r >= 0);
  }
}

TEST_CASE("residual_table follows column order") {
  const ModelColumn a{"A", golden::kSeriesOptimal};
  const ModelColumn m{"M", golden::kSeriesSixDigits};
  const std::vector<ModelColumn> am{a, m};
  const std::vector<ModelColumn> ma{m, a};
  const auto r1 = residual_table(series(), am);
  const auto r2 = residual_table(series(), ma);
  for (std::size_t i = 0; i < r1.rows.size(); ++i) {
    CHECK(r1.rows[i].residuals[0] == r2.rows[i].residuals[1]);
    CHECK(r1.rows[i].residuals[1] == r2.rows[i].residuals[0]);
  }
  const std::vector<ModelColumn> twice{a, a};
  for (const auto& row : residual_table(series(), twice).rows) CHECK(row.residuals[0] == row.residuals[1]);
}

TEST_CASE("check_optimality") {
  const Polynomial six(golden::kSeriesSixDigits);
  SUBCASE("optimal display passes") {
    const auto c = check_optimality(series(), six, RoundedPolynomial(golden::kSeriesOptimal, series_plan()));
    CHECK(c.pass);
    CHECK(c.bound == doctest::Approx(200));
    CHECK(c.max_deviation == doctest::Approx(11.4984).epsilon(1e-4));
  }
  SUBCASE("one-digit spreadsheet display fails") {
    const auto c = check_optimality(series(), six, RoundedPolynomial(golden::kSeriesSpreadsheet, series_plan()));
    CHECK_FALSE(c.pass);
    CHECK(c.max_deviation == doctest::Approx(68838.99).epsilon(1e-5));
    CHECK(c.worst_point == 26);
  }
  SUBCASE("pear spreadsheet display fails, optimal passes") {
    const auto pear = prepare(golden::kPear, 0);
    const auto pear_plan = plan(0, 6, 84.3L);
    const Polynomial pear_six(golden::kPearSixDigits);
    CHECK_FALSE(check_optimality(pear, pear_six, RoundedPolynomial(golden::kPearSpreadsheet, pear_plan)).pass);
    CHECK(check_optimality(pear, pear_six, RoundedPolynomial(golden::kPearOptimal, pear_plan)).pass);
  }
  SUBCASE("no rounding") {
    const auto c = check_optimality(series(), six, RoundedPolynomial(golden::kSeriesSixDigits, series_plan()));
    CHECK(c.pass);
    CHECK(c.max_deviation == 0);
  }
}

TEST_CASE("compare_r_squared") {
  const Polynomial six(golden::kSeriesSixDigits);
  auto c = compare_r_squared(series(), six, RoundedPolynomial(golden::kSeriesOptimal, series_plan()));
  CHECK(c.full == doctest::Approx(0.992301).epsilon(1e-6));
  CHECK(c.rounded == doctest::Approx(0.992303).epsilon(1e-6));
  CHECK(c.delta == doctest::Approx(1.65e-6).epsilon(0.1));

  c = compare_r_squared(series(), six, RoundedPolynomial(golden::kSeriesSpreadsheet, series_plan()));
  CHECK(c.delta == doctest::Approx(0.992301 - 0.102172).epsilon(1e-5));

  c = compare_r_squared(series(), six, RoundedPolynomial(golden::kSeriesSixDigits, series_plan()));
  CHECK(c.delta == 0);

  const auto pear = prepare(golden::kPear, 0);
  CHECK_THROWS_AS(compare_r_squared(pear, fit(pear, 6), RoundedPolynomial(golden::kPearOptimal, plan(0, 6, 84.3L))),
                  DomainError);
}

TEST_CASE("verify bundles full and rounded columns") {
  const auto full = fit(series(), 3);
  const auto rounded = round_coefficients(full, series_plan());
  const auto v = verify(series(), full, rounded);
  CHECK(v.labels == std::vector<std::string>{"full", "rounded"});
  REQUIRE(v.optimality.has_value());
  CHECK(v.optimality->pass);
  CHECK(v.optimality->max_deviation == doctest::Approx(11.0241474).epsilon(1e-6));
}
