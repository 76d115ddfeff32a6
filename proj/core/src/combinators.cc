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
#include "klm/combinators.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "klm/cumulative.h"

namespace klm {

namespace {

// Sorted union of two supports.
std::vector<double> merged_support(std::span<const double> a,
                                   std::span<const double> b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

// Builds the distribution whose CDF takes the (nondecreasing) values `cdf` on
// `support`, normalized by `total`. Points without a positive jump are
// dropped.
DiscreteDistribution from_cdf(const std::vector<double>& support,
                              const std::vector<double>& cdf, double total) {
  std::vector<double> values;
  std::vector<double> probs;
  double previous = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double jump = cdf[i] - previous;
    if (jump > 0.0) {
      values.push_back(support[i]);
      probs.push_back(jump / total);
    }
    previous = std::max(previous, cdf[i]);
  }
  return DiscreteDistribution(std::move(values), std::move(probs));
}

// F evaluated on a superset of the distribution's support.
std::vector<double> cdf_on(const DiscreteDistribution& dist,
                           const std::vector<double>& support) {
  const CumulativeView view(dist);
  const auto values = dist.values();
  std::vector<double> out(support.size());
  std::size_t k = 0;
  double f = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    while (k < values.size() && values[k] <= support[i]) f = view.at(k++);
    out[i] = f;
  }
  return out;
}

}  // namespace

DiscreteDistribution convolve(const DiscreteDistribution& a,
                              const DiscreteDistribution& b) {
  std::vector<std::pair<double, double>> terms;
  terms.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      terms.emplace_back(a.value(i) + b.value(j), a.prob(i) * b.prob(j));
    }
  }
  std::sort(terms.begin(), terms.end());

  std::vector<double> values;
  std::vector<CompensatedSum> mass;
  for (const auto& [value, prob] : terms) {
    if (values.empty() || values.back() != value) {
      values.push_back(value);
      mass.emplace_back();
    }
    mass.back().add(prob);
  }
  CompensatedSum total;
  std::vector<double> probs(mass.size());
  for (std::size_t i = 0; i < mass.size(); ++i) {
    probs[i] = mass[i].value();
    total.add(probs[i]);
  }
  const double scale = total.value();
  std::vector<double> kept_values;
  std::vector<double> kept_probs;
  kept_values.reserve(values.size());
  kept_probs.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    // Products of tiny masses can underflow to zero.
    if (probs[i] > 0.0) {
      kept_values.push_back(values[i]);
      kept_probs.push_back(probs[i] / scale);
    }
  }
  return DiscreteDistribution(std::move(kept_values), std::move(kept_probs));
}

DiscreteDistribution max_of(const DiscreteDistribution& a,
                            const DiscreteDistribution& b) {
  const auto support = merged_support(a.values(), b.values());
  const auto fa = cdf_on(a, support);
  const auto fb = cdf_on(b, support);
  std::vector<double> cdf(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) cdf[i] = fa[i] * fb[i];
  return from_cdf(support, cdf, cdf.back());
}

DiscreteDistribution min_of(const DiscreteDistribution& a,
                            const DiscreteDistribution& b) {
  const auto support = merged_support(a.values(), b.values());
  const auto fa = cdf_on(a, support);
  const auto fb = cdf_on(b, support);
  const double ta = fa.back();
  const double tb = fb.back();
  // Survival functions, then F = total - S.
  std::vector<double> cdf(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double sa = std::max(0.0, ta - fa[i]);
    const double sb = std::max(0.0, tb - fb[i]);
    cdf[i] = ta * tb - sa * sb;
  }
  return from_cdf(support, cdf, ta * tb);
}

}  // namespace klm
