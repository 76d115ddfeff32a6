// Copyright 2026 The klmapprox Authors
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

#include <cstdint>
#include <vector>

#include "klm/baselines.h"
#include "klm/combinators.h"
#include "klm/distance.h"
#include "klm/random.h"
#include "klm/reduce.h"

namespace klm {
namespace {

DiscreteDistribution random_input(std::size_t n, std::uint64_t seed) {
  Xoshiro256StarStar rng(seed);
  std::vector<double> values(n), probs(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = static_cast<double>(i + 1);
    probs[i] = rng.uniform_open();
  }
  return make_distribution(values, probs, MassPolicy::kRenormalize);
}

void BM_Reduce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto x = random_input(n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(x, m));
  state.SetComplexityN(state.range(0) * state.range(0) * state.range(1));
}
BENCHMARK(BM_Reduce)
    ->ArgsProduct({{250, 500, 1000, 2000}, {10, 20, 40}})
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

void BM_OptTrim(benchmark::State& state) {
  const auto x = random_input(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(opt_trim(x, 20));
}
BENCHMARK(BM_OptTrim)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Trim(benchmark::State& state) {
  const auto x = random_input(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(trim_with_budget(x, 20));
}
BENCHMARK(BM_Trim)->Arg(1000)->Arg(100000);

void BM_KolmogorovDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_input(n, 1);
  const auto b = random_input(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kolmogorov_distance(a, b));
}
BENCHMARK(BM_KolmogorovDistance)->Range(1 << 10, 1 << 18);

void BM_Convolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_input(n, 1);
  const auto b = random_input(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b));
}
BENCHMARK(BM_Convolve)->Arg(30)->Arg(100)->Arg(300);

}  // namespace
}  // namespace klm
