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
#include "klmapprox/bench.h"

#include <cmath>
#include <sstream>

#include "klm/distance.h"
#include "klm/error.h"
#include "klm/io.h"
#include "klm/random.h"

namespace klm::cli {

DiscreteDistribution random_instance(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::kEmptyDistribution, "n must be >= 1");
  Xoshiro256StarStar rng(seed);
  std::vector<double> values(n);
  std::vector<double> weights(n);
  CompensatedSum total;
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = static_cast<double>(i + 1);
    weights[i] = rng.uniform_open();
    total.add(weights[i]);
  }
  for (double& w : weights) w /= total.value();
  return DiscreteDistribution(std::move(values), std::move(weights));
}

const BenchRow* BenchReport::find(Method method, std::size_t m) const {
  for (const auto& row : rows) {
    if (row.method == method && row.m == m) return &row;
  }
  return nullptr;
}

BenchReport run_bench(const BenchConfig& config) {
  if (config.n < 2) throw Error(ErrorCode::kBadM, "--n must be >= 2");
  if (config.instances == 0) throw Error(ErrorCode::kBadM, "--instances must be >= 1");

  BenchReport report;
  for (Method method : config.methods) {
    for (std::size_t m : config.ms) {
      if (m == 0) throw Error(ErrorCode::kBadM, "m must be >= 1");
      BenchRow row;
      row.method = method;
      row.m = m;
      row.instances = config.instances;
      row.n = config.n;
      row.seed = config.seed;
      report.rows.push_back(std::move(row));
    }
  }

  for (std::size_t i = 0; i < config.instances; ++i) {
    const std::uint64_t instance_seed = derive_seed(config.seed, i);
    const DiscreteDistribution x = random_instance(config.n, instance_seed);
    for (auto& row : report.rows) {
      ReducerConfig reducer;
      reducer.method = row.method;
      reducer.m = row.m;
      reducer.samples = config.samples;
      reducer.seed = instance_seed;
      const BaselineResult result = apply_reducer(x, reducer, 1);
      row.errors.push_back(result.two_sided_error);
    }
  }

  for (auto& row : report.rows) {
    CompensatedSum sum;
    for (double e : row.errors) sum.add(e);
    const double count = static_cast<double>(row.errors.size());
    row.mean_error = sum.value() / count;
    double squares = 0.0;
    for (double e : row.errors) squares += (e - row.mean_error) * (e - row.mean_error);
    row.std_error =
        row.errors.size() > 1 ? std::sqrt(squares / (count - 1.0)) / std::sqrt(count) : 0.0;
  }
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "method,m,mean_error,std_error,instances,n,seed\n";
  for (const auto& row : report.rows) {
    out << method_name(row.method) << ',' << row.m << ','
        << format_double(row.mean_error) << ',' << format_double(row.std_error)
        << ',' << row.instances << ',' << row.n << ',' << row.seed << '\n';
  }
  return out.str();
}

}  // namespace klm::cli
