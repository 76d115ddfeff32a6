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
#ifndef KLMAPPROX_BENCH_H_
#define KLMAPPROX_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "klm/baselines.h"
#include "klm/distribution.h"

namespace klm::cli {

// Random instance: support 1..n, each probability an independent uniform
// (0, 1) draw from Xoshiro256StarStar(seed), normalized to sum to 1.
DiscreteDistribution random_instance(std::size_t n, std::uint64_t seed);

struct BenchConfig {
  std::size_t n = 100;
  std::size_t instances = 50;
  std::vector<std::size_t> ms = {2, 4, 8, 10, 20, 50};
  std::vector<Method> methods = {Method::kKlm, Method::kOptTrim, Method::kTrim};
  std::uint64_t seed = 1;
  std::size_t samples = 10000;  // for Method::kSample
};

struct BenchRow {
  Method method = Method::kKlm;
  std::size_t m = 0;
  double mean_error = 0.0;
  // Standard error of the mean: sample standard deviation / sqrt(instances).
  double std_error = 0.0;
  std::size_t instances = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  // d_K(X_i, approx_i) per instance, in instance order.
  std::vector<double> errors;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // methods outer, m inner, as configured

  const BenchRow* find(Method method, std::size_t m) const;
};

// Instance i is random_instance(n, derive_seed(seed, i)); sampling runs use
// stream 1 of the instance seed.
BenchReport run_bench(const BenchConfig& config);

// Columns: method,m,mean_error,std_error,instances,n,seed.
std::string bench_csv(const BenchReport& report);

}  // namespace klm::cli

#endif  // KLMAPPROX_BENCH_H_
