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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "sigtrend/polyfit.hpp"

namespace {

sigtrend::Dataset random_data(int points, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> y(0, 1e4);
  std::vector<sigtrend::Point> pts;
  for (int i = 0; i < points; ++i) pts.push_back({static_cast<sigtrend::real>(i) * 100, static_cast<sigtrend::real>(y(rng))});
  return sigtrend::prepare(pts, 0);
}

void BM_Fit(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const auto data = random_data(static_cast<int>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sigtrend::fit(data, degree));
}
BENCHMARK(BM_Fit)->Args({3, 27})->Args({6, 7})->Args({6, 200})->Args({10, 1000});

void BM_RSquared(benchmark::State& state) {
  const auto data = random_data(static_cast<int>(state.range(0)), 2);
  const auto poly = sigtrend::fit(data, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sigtrend::r_squared(data, poly));
}
BENCHMARK(BM_RSquared)->Arg(27)->Arg(1000);

}  // namespace
