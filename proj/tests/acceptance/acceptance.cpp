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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "random_tree.hpp"
#include "sigtrend/decimal.hpp"
#include "sigtrend/expr.hpp"
#include "sigtrend/polyfit.hpp"
#include "sigtrend/sigdigits.hpp"
#include "sigtrend/verify.hpp"

using namespace sigtrend;

namespace {

using Clock = std::chrono::steady_clock;

// Collects sub-check results for one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  [[nodiscard]] bool pass() const { return pass_; }
  [[nodiscard]] std::string detail() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + ("failed: " + f);
    for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
    return out;
  }

 private:
  bool pass_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string num(real v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, v);
  return buf;
}

std::string list(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void plan_golden(Criterion& c) {
  const auto t0 = Clock::now();
  struct Case {
    const char* name;
    PrecisionPlan got;
    std::vector<int> want;
  };
  const std::vector<Case> cases{
      {"pear", plan(0, 6, 84.3L), {-1, -3, -5, -7, -9, -11, -13}},
      {"employees", plan(-1, 5, 33), golden::kEmployeesPositions},
      {"employees in units of 1", plan(5, 5, 33000), golden::kEmployeesUnitPositions},
      {"cost series", plan(0, 3, 2600, 2), golden::kSeriesPositions},
  };
  for (const auto& k : cases) c.expect(k.got.positions == k.want, std::string(k.name) + " " + list(k.got.positions));
  const std::vector<double> raw{-1, -2.93, -4.85, -6.78, -8.70, -10.63, -12.56};
  const auto& pear = cases[0].got;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    c.expect(std::fabs(static_cast<double>(pear.raw_positions[k]) - raw[k]) <= 0.01,
             "raw position k=" + std::to_string(k) + " = " + num(pear.raw_positions[k]));
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 1, "took " + std::to_string(secs) + " s");
}

void fit_golden(Criterion& c) {
  const auto pear = fit(prepare(golden::kPear, 0), 6);
  for (int k = 1; k <= 6; ++k) {
    const real want = golden::kPearSixDigits[static_cast<std::size_t>(k)];
    const real rel = std::fabs(pear.coefficient(k) - want) / std::fabs(want);
    c.expect(rel <= 1e-5L, "pear a" + std::to_string(k) + " rel err " + num(rel, 3));
  }
  c.expect(std::fabs(pear.coefficient(0)) < 1e-9L, "pear |a0| = " + num(pear.coefficient(0), 3));

  // Compare to the printed digits: positions of the last printed digit.
  const auto emp = fit(prepare(golden::kEmployees, -1), 5);
  for (int k = 0; k <= 5; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const real got = round_to_position(emp.coefficient(k), golden::kEmployeesPositions[i]);
    c.expect(got == golden::kEmployeesOptimal[i], "employees a" + std::to_string(k) + " = " + num(got, 10));
  }
}

void rounding_golden(Criterion& c) {
  const auto pear = round_coefficients(Polynomial(golden::kPearSixDigits), plan(0, 6, 84.3L));
  for (int k = 0; k <= 6; ++k) {
    c.expect(pear.coefficient(k) == golden::kPearOptimal[static_cast<std::size_t>(k)],
             "pear a" + std::to_string(k) + " = " + num(pear.coefficient(k), 10));
  }
  c.expect(pear.dropped_terms() == std::vector<int>{0}, "pear constant term not dropped");

  const auto series = round_coefficients(Polynomial(golden::kSeriesSixDigits), plan(0, 3, 2600, 2));
  for (int k = 0; k <= 3; ++k) {
    c.expect(series.coefficient(k) == golden::kSeriesOptimal[static_cast<std::size_t>(k)],
             "series a" + std::to_string(k) + " = " + num(series.coefficient(k), 10));
  }

  // Same result straight from the data.
  const auto data = prepare(golden::kSeries, 0);
  const auto full = fit(data, 3);
  const auto b = compute_fit_offset(*full.r_squared(), data.y_max());
  const auto piped = round_coefficients(full, plan(0, 3, data.x_max(), b));
  bool same = true;
  for (int k = 0; k <= 3; ++k) same = same && piped.coefficient(k) == golden::kSeriesOptimal[static_cast<std::size_t>(k)];
  c.expect(same, "series fit -> round pipeline");
}

void verification_golden(Criterion& c) {
  const auto data = prepare(golden::kSeries, 0);
  const auto pl = plan(0, 3, 2600, 2);

  const std::vector<ModelColumn> optimal{{"A", golden::kSeriesOptimal}};
  const auto table = residual_table(data, optimal);
  int off = 0;
  real worst = 0;
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const real diff = std::fabs(table.rows[i].residuals[0] - golden::kSeriesResidualsOptimal[i]);
    if (diff > 0.1L) ++off;
    if (diff > worst) {
      worst = diff;
      worst_i = i;
    }
  }
  c.expect(off == 0, "optimal residual column: " + std::to_string(off) + "/27 rows outside 0.1 (worst x=" +
                         num(table.rows[worst_i].x) + ": " + num(table.rows[worst_i].residuals[0], 7) +
                         " vs published " + num(golden::kSeriesResidualsOptimal[worst_i], 7) + ")");

  struct R2 {
    const char* label;
    const std::vector<real>* coeffs;
    real published;
  };
  for (const auto& r : {R2{"A", &golden::kSeriesOptimal, golden::kR2Optimal},
                        R2{"M", &golden::kSeriesSixDigits, golden::kR2SixDigits},
                        R2{"E", &golden::kSeriesSpreadsheet, golden::kR2Spreadsheet}}) {
    const real pct = 100 * r_squared(data, *r.coeffs);
    c.expect(std::fabs(pct - r.published) <= 0.0005L, std::string("R^2 ") + r.label + " = " + num(pct, 8));
    c.note(std::string("R^2(") + r.label + ")=" + num(pct, 7) + "%");
  }

  const Polynomial six(golden::kSeriesSixDigits);
  const auto good = check_optimality(data, six, RoundedPolynomial(golden::kSeriesOptimal, pl));
  const auto bad = check_optimality(data, six, RoundedPolynomial(golden::kSeriesSpreadsheet, pl));
  c.expect(good.pass, "optimal display rejected (max dev " + num(good.max_deviation) + ")");
  c.expect(!bad.pass, "one-digit display accepted");
  c.note("optimality max dev " + num(good.max_deviation) + " / " + num(bad.max_deviation) + " vs bound " +
         num(good.bound));
}

void fit_offset(Criterion& c) {
  const auto b = compute_fit_offset(0.9923L, 94884);
  c.expect(b == 2, "B = " + (b ? std::to_string(*b) : std::string("none")));
  c.expect(first_digit_position((1 - 0.9923L) * 94884) == 2, "first digit of 730.607");
}

void unit_rescaling(Criterion& c) {
  const auto base = plan(-1, 5, 33);
  const auto unit = rescale_positions(base, {3, 6});
  c.expect(unit.positions == golden::kEmployeesUnitPositions, "forward " + list(unit.positions));
  const auto back = rescale_positions(unit, {-3, -6});
  c.expect(back.positions == golden::kEmployeesPositions, "inverse " + list(back.positions));
}

void precedence(Criterion& c) {
  using expr::Precedence;
  struct Case {
    const char* src;
    real math;
    real spreadsheet;
  };
  for (const auto& k : {Case{"-1^2", -1, 1}, Case{"-(-3)^2", -9, 9}, Case{"-(-2)^4", -16, 16},
                        Case{"-(-2)^(-4)", -1.0L / 16, 1.0L / 16}}) {
    const real m = expr::evaluate(expr::parse(k.src, Precedence::math), {});
    const real s = expr::evaluate(expr::parse(k.src, Precedence::spreadsheet), {});
    c.expect(m == k.math && s == k.spreadsheet, std::string(k.src) + " -> (" + num(m) + ", " + num(s) + ")");
  }
  const expr::Env env{{"a", 1.5L}, {"x", 2}};
  const real m = expr::evaluate(expr::parse("a-x^2", Precedence::math), env);
  const real s = expr::evaluate(expr::parse("a-x^2", Precedence::spreadsheet), env);
  c.expect(m == -2.5L && s == -2.5L, "a-x^2");

  const auto t0 = Clock::now();
  expr::TreeGen gen(20261015, true);
  int checked = 0;
  int broken = 0;
  while (checked < 10000) {
    const auto tree = gen(5);
    const auto vars = gen.env();
    real want = 0;
    try {
      want = expr::evaluate(*tree, vars);
    } catch (const DomainError&) {
      continue;
    }
    if (!std::isfinite(want)) continue;
    const auto text = expr::emit_safe(*tree);
    try {
      const real vm = expr::evaluate(expr::parse(text, Precedence::math), vars);
      const real vs = expr::evaluate(expr::parse(text, Precedence::spreadsheet), vars);
      if (vm != vs || vm != want) ++broken;
    } catch (const std::exception&) {
      ++broken;
    }
    ++checked;
  }
  const double secs = seconds_since(t0);
  c.expect(broken == 0, std::to_string(broken) + " of 10000 safe forms disagree");
  c.expect(secs < 10, "round trip took " + std::to_string(secs) + " s");
  c.note("10000 random trees in " + num(secs, 3) + " s");
}

void whole_model_bound(Criterion& c) {
  std::mt19937_64 rng(8128);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> xmax(1, 1e4);
  std::uniform_int_distribution<int> prec(-3, 5);
  std::uniform_int_distribution<int> digits(0, 99999);
  int evaluated = 0;
  int skipped = 0;
  int violations = 0;
  int interpolations = 0;
  real worst_ratio = 0;
  while (evaluated < 1000) {
    const int n = size(rng);
    const int p = prec(rng);
    const real xn = round_to_position(static_cast<real>(xmax(rng)), -2);
    std::uniform_real_distribution<double> xs(0, static_cast<double>(xn));
    std::vector<Point> pts{{xn, 0}};
    while (static_cast<int>(pts.size()) < n + 1) {
      const real x = round_to_position(static_cast<real>(xs(rng)), -2);
      bool fresh = x < xn;
      for (const auto& q : pts) fresh = fresh && q.x != x;
      if (fresh) pts.push_back({x, 0});
    }
    for (auto& q : pts) q.y = shift_decimal(static_cast<real>(digits(rng)), p);

    std::uniform_int_distribution<int> deg(0, n);
    const int d = deg(rng);
    try {
      const auto data = prepare(pts, p);
      const auto full = fit(data, d);
      std::optional<int> b;
      if (d < n && full.r_squared()) b = compute_fit_offset(*full.r_squared(), data.y_max());
      const auto pl = plan(p, d, data.x_max(), b);
      check_conditioning(full, pl);
      const auto check = check_optimality(data, full, round_coefficients(full, pl));
      if (!check.pass) ++violations;
      worst_ratio = std::max(worst_ratio, check.max_deviation / check.bound);
      if (!b) ++interpolations;
      ++evaluated;
    } catch (const ConditioningError&) {
      ++skipped;
    } catch (const DomainError&) {
      ++skipped;  // constant y: R^2 undefined
    }
  }
  c.expect(violations == 0, std::to_string(violations) + " violations");
  c.note(std::to_string(evaluated) + " datasets (" + std::to_string(interpolations) + " interpolation-form plans), " +
         std::to_string(skipped) + " ill-conditioned skipped, worst deviation/bound " + num(worst_ratio, 3));
}

void reference_vectors(Criterion& c) {
  const auto data = prepare(golden::kSeries, 0);
  const std::vector<ModelColumn> cols{{"E", golden::kSeriesSpreadsheet}, {"T", golden::kSeriesFiveDigits}};
  const auto table = residual_table(data, cols);
  real worst_e = 0;
  real worst_t = 0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    worst_e = std::max(worst_e, std::fabs(table.rows[i].residuals[0] - golden::kSeriesResidualsSpreadsheet[i]));
    worst_t = std::max(worst_t, std::fabs(table.rows[i].residuals[1] - golden::kSeriesResidualsFiveDigits[i]));
  }
  c.expect(worst_e <= 0.1L, "spreadsheet column off by " + num(worst_e, 3));
  c.expect(worst_t <= 0.1L, "five-digit column off by " + num(worst_t, 3));
  c.expect(std::fabs(100 * *table.r_squared[1] - golden::kR2FiveDigits) <= 0.0005L,
           "R^2(T) = " + num(100 * *table.r_squared[1], 8));

  const auto pear = prepare(golden::kPear, 0);
  const auto pear_plan = plan(0, 6, 84.3L);
  const Polynomial six(golden::kPearSixDigits);
  const auto e = check_optimality(pear, six, RoundedPolynomial(golden::kPearSpreadsheet, pear_plan));
  c.expect(!e.pass, "pear spreadsheet display accepted");
  c.note("pear spreadsheet display deviates by " + num(e.max_deviation, 4) + " (bound " + num(e.bound) + ")");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> entries{
      {1, "precision plans", plan_golden},
      {2, "full-precision fits", fit_golden},
      {3, "rounded coefficients", rounding_golden},
      {4, "residuals, R^2 and optimality", verification_golden},
      {5, "fit offset B", fit_offset},
      {6, "unit rescaling", unit_rescaling},
      {7, "precedence regimes", precedence},
      {8, "whole-model bound on random data", whole_model_bound},
      {9, "third-party reference vectors", reference_vectors},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    if (!c.pass()) ++failed;
    std::printf("%s  %d. %s%s%s\n", c.pass() ? "PASS" : "FAIL", e.id, e.name, c.detail().empty() ? "" : "  -- ",
                c.detail().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(entries.size()) - failed, entries.size());
  return failed == 0 ? 0 : 1;
}
