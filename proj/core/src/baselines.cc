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
#include "klm/baselines.h"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "klm/bottleneck.h"
#include "klm/cumulative.h"
#include "klm/distance.h"
#include "klm/error.h"
#include "klm/random.h"
#include "klm/reduce.h"
#include "klm/sampling.h"

namespace klm {

namespace {

void check_budget(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::kBadM, "m must be >= 1");
}

}  // namespace

BaselineResult evaluate_approximation(const DiscreteDistribution& source,
                                      DiscreteDistribution approx) {
  const OneSidedDistance one_sided = one_sided_distance(source, approx);
  const double two_sided = kolmogorov_distance(source, approx);
  return BaselineResult{std::move(approx), two_sided, one_sided.excess,
                        one_sided.dominates};
}

BaselineResult trim_epsilon(const DiscreteDistribution& dist, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::kBadEps, "eps must lie in (0, 1)");
  }
  std::vector<double> values{dist.value(0)};
  std::vector<CompensatedSum> mass(1);
  mass.back().add(dist.prob(0));
  double absorbed = 0.0;
  for (std::size_t k = 1; k < dist.size(); ++k) {
    if (absorbed + dist.prob(k) <= eps) {
      absorbed += dist.prob(k);
    } else {
      values.push_back(dist.value(k));
      mass.emplace_back();
      absorbed = 0.0;
    }
    mass.back().add(dist.prob(k));
  }
  std::vector<double> probs(mass.size());
  for (std::size_t g = 0; g < mass.size(); ++g) probs[g] = mass[g].value();
  return evaluate_approximation(
      dist, DiscreteDistribution(std::move(values), std::move(probs)));
}

BaselineResult trim_with_budget(const DiscreteDistribution& dist,
                                std::size_t m) {
  check_budget(m);
  if (m == 1) {
    return evaluate_approximation(
        dist, DiscreteDistribution::point_mass(dist.min_value()));
  }
  double eps = 1.0 / static_cast<double>(m);
  BaselineResult result = trim_epsilon(dist, eps);
  // The group bound is exact in real arithmetic; nudge past rounding.
  while (result.approx.size() > m) {
    eps = std::nextafter(eps, 1.0);
    result = trim_epsilon(dist, eps);
  }
  return result;
}

BaselineResult opt_trim(const DiscreteDistribution& dist, std::size_t m) {
  check_budget(m);
  const std::size_t n = dist.size();
  if (m >= n) return evaluate_approximation(dist, dist);

  constexpr double kForbidden = std::numeric_limits<double>::infinity();
  const CumulativeView cdf(dist);
  // Shifting mass down onto a kept point costs the whole absorbed interval.
  const BottleneckPath path = min_bottleneck_path(
      n, m, [](std::size_t j) { return j == 0 ? 0.0 : kForbidden; },
      [&](std::size_t i, std::size_t j) { return cdf.open_mass(i, j); },
      [&](std::size_t i) { return cdf.mass_above(i); });

  const auto& kept = path.interior;
  std::vector<double> values(kept.size());
  std::vector<double> probs(kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const std::size_t i = kept[k];
    const double upto = k + 1 == kept.size() ? cdf.total() : cdf.below(kept[k + 1]);
    values[k] = dist.value(i);
    probs[k] = upto - cdf.below(i);
  }
  return evaluate_approximation(
      dist, DiscreteDistribution(std::move(values), std::move(probs)));
}

BaselineResult sample_reduce(const DiscreteDistribution& dist,
                             std::size_t samples, std::size_t m,
                             std::uint64_t seed) {
  check_budget(m);
  if (samples == 0) throw Error(ErrorCode::kBadM, "sample count must be >= 1");
  DiscreteDistribution empirical = sample_empirical(dist, samples, seed);
  if (empirical.size() > m) empirical = reduce(empirical, m).approx;
  return evaluate_approximation(dist, std::move(empirical));
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kKlm: return "klm";
    case Method::kOptTrim: return "opttrim";
    case Method::kTrim: return "trim";
    case Method::kSample: return "sample";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::kKlm, Method::kOptTrim, Method::kTrim, Method::kSample}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

BaselineResult apply_reducer(const DiscreteDistribution& dist,
                             const ReducerConfig& config, std::uint64_t stream) {
  switch (config.method) {
    case Method::kKlm: {
      ReductionResult r = reduce(dist, config.m);
      return evaluate_approximation(dist, std::move(r.approx));
    }
    case Method::kOptTrim:
      return opt_trim(dist, config.m);
    case Method::kTrim:
      return config.eps ? trim_epsilon(dist, *config.eps)
                        : trim_with_budget(dist, config.m);
    case Method::kSample: {
      const std::uint64_t seed =
          stream == 0 ? config.seed : derive_seed(config.seed, stream);
      return sample_reduce(dist, config.samples, config.m, seed);
    }
  }
  throw Error(ErrorCode::kBadM, "unknown method");
}

}  // namespace klm
