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

#include <vector>

#include <benchmark/benchmark.h>

#include "sigtrend/decimal.hpp"
#include "sigtrend/render.hpp"
#include "sigtrend/sigdigits.hpp"

namespace {

void BM_Plan(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigtrend::plan(0, degree, 2600, 2));
}
BENCHMARK(BM_Plan)->Arg(3)->Arg(12);

void BM_RoundToPosition(benchmark::State& state) {
  sigtrend::real z = -0.2517748098456399855L;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigtrend::round_to_position(z, -5));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_RoundToPosition);

void BM_RoundAndRender(benchmark::State& state) {
  const sigtrend::Polynomial full({0, 4.10923554701264L, -0.25177480984564L, 0.00921349200581839L,
                                   -0.000194089086434907L, 2.06268518440176e-6L, -8.51612932586677e-9L});
  const auto pl = sigtrend::plan(0, 6, 84.3L);
  for (auto _ : state) {
    const auto rounded = sigtrend::round_coefficients(full, pl);
    benchmark::DoNotOptimize(sigtrend::render_equation(rounded));
  }
}
BENCHMARK(BM_RoundAndRender);

}  // namespace
