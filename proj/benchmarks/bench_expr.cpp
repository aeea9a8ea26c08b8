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

#include <benchmark/benchmark.h>

#include "sigtrend/expr.hpp"

namespace {

constexpr const char* kModel = "b1+b2*exp(-(b3*(t-b4))^2)";

const sigtrend::expr::Env kEnv{{"b1", 43.5L}, {"b2", 41.6L}, {"b3", 37.2e-4L}, {"b4", 443.8L}, {"t", 600}};

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sigtrend::expr::parse(kModel, sigtrend::expr::Precedence::math));
}
BENCHMARK(BM_Parse);

void BM_Evaluate(benchmark::State& state) {
  const auto ast = sigtrend::expr::parse(kModel, sigtrend::expr::Precedence::math);
  for (auto _ : state) benchmark::DoNotOptimize(sigtrend::expr::evaluate(ast, kEnv));
}
BENCHMARK(BM_Evaluate);

void BM_DiscrepancyScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sigtrend::expr::discrepancy_scan(kModel, kEnv));
}
BENCHMARK(BM_DiscrepancyScan);

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigtrend::expr::discrepancy_sweep(kModel, kEnv, "t", 0, 1000, 200));
  }
}
BENCHMARK(BM_Sweep);

}  // namespace
