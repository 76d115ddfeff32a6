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
#ifndef KLM_BASELINES_H_
#define KLM_BASELINES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "klm/distribution.h"

namespace klm {

// Comparison methods. trim and opttrim are one-sided reductions: the
// approximate CDF never drops below the source CDF, so every support point
// only receives mass from points above it. Both are written from that
// contract alone.

struct BaselineResult {
  DiscreteDistribution approx;
  double two_sided_error = 0.0;  // d_K(source, approx)
  double one_sided_error = 0.0;  // sup_t F_approx(t) - F_source(t)
  bool one_sided_valid = false;  // F_approx >= F_source - 1e-12 everywhere
};

// Recomputes every error field of a BaselineResult from the source.
BaselineResult evaluate_approximation(const DiscreteDistribution& source,
                                      DiscreteDistribution approx);

// Greedy left-to-right grouping. Each group's leader is its smallest point
// and takes the whole group's mass; a group keeps absorbing the following
// points while the absorbed mass stays <= eps. Throws kBadEps unless
// 0 < eps < 1.
BaselineResult trim_epsilon(const DiscreteDistribution& dist, double eps);

// trim_epsilon with the budget-compatible threshold eps = 1/m, which yields at
// most m groups (each closed group plus the next leader carries more than
// eps of mass). m == 1 collapses to the minimum point. Throws kBadM for m == 0.
BaselineResult trim_with_budget(const DiscreteDistribution& dist,
                                std::size_t m);

// Optimal one-sided reduction with at most m points. The minimum support
// point is always kept (mass below it cannot move down), each kept point
// collects the mass up to the next kept point, and the kept set minimizes the
// largest absorbed mass via the hop-bounded bottleneck search. Throws kBadM.
BaselineResult opt_trim(const DiscreteDistribution& dist, std::size_t m);

// Empirical distribution of `samples` draws; reduced with the optimal
// reducer when its support exceeds m. Throws kBadM for m == 0 or
// samples == 0.
BaselineResult sample_reduce(const DiscreteDistribution& dist,
                             std::size_t samples, std::size_t m,
                             std::uint64_t seed);

enum class Method { kKlm, kOptTrim, kTrim, kSample };

std::string_view method_name(Method method);
// Accepts "klm", "opttrim", "trim", "sample".
std::optional<Method> parse_method(std::string_view name);

// A reducer with its budget and method-specific parameters.
struct ReducerConfig {
  Method method = Method::kKlm;
  std::size_t m = 1;
  std::optional<double> eps;    // trim only; defaults to the budget mapping
  std::size_t samples = 10000;  // sample only
  std::uint64_t seed = 0;       // sample only
};

// Applies the configured reducer. `stream` selects an independent sampling
// stream (derive_seed(seed, stream)); stream 0 uses `seed` unchanged.
BaselineResult apply_reducer(const DiscreteDistribution& dist,
                             const ReducerConfig& config,
                             std::uint64_t stream = 0);

}  // namespace klm

#endif  // KLM_BASELINES_H_
