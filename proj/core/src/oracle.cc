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
#include "klm/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "klm/error.h"

namespace klm {

namespace {

// Mass strictly between support positions lo and hi (-1 and n act as the
// sentinels), summed directly.
double mass_between(std::span<const double> probs, long lo, long hi) {
  double mass = 0.0;
  for (long k = lo + 1; k < hi; ++k) mass += probs[static_cast<std::size_t>(k)];
  return mass;
}

// eps(X, S) straight from the definition: scan the segments cut by S.
double literal_epsilon(std::span<const double> probs,
                       const std::vector<long>& subset) {
  const long n = static_cast<long>(probs.size());
  double eps = 0.0;
  long previous = -1;
  for (long chosen : subset) {
    double mass = mass_between(probs, previous, chosen);
    if (previous != -1) mass /= 2.0;
    eps = std::max(eps, mass);
    previous = chosen;
  }
  return std::max(eps, mass_between(probs, previous, n));
}

struct Search {
  std::span<const double> probs;
  std::size_t budget;
  std::vector<long> current;
  std::vector<long> best;
  double best_eps = std::numeric_limits<double>::infinity();

  // Depth-first preorder visits subsets in lexicographic order, prefixes
  // first; only a strictly smaller eps replaces the incumbent.
  void visit(long start) {
    const long n = static_cast<long>(probs.size());
    for (long k = start; k < n; ++k) {
      current.push_back(k);
      const double eps = literal_epsilon(probs, current);
      if (eps < best_eps) {
        best_eps = eps;
        best = current;
      }
      if (current.size() < budget) visit(k + 1);
      current.pop_back();
    }
  }
};

}  // namespace

ReductionResult brute_force_reduce(const DiscreteDistribution& dist,
                                   std::size_t m) {
  if (m == 0) throw Error(ErrorCode::kBadM, "m must be >= 1");
  const std::size_t n = dist.size();
  if (n > kOracleMaxSupport) {
    throw Error(ErrorCode::kTooLarge,
                "support of " + std::to_string(n) + " exceeds the oracle limit " +
                    std::to_string(kOracleMaxSupport));
  }
  const auto probs = dist.probs();
  Search search{probs, std::min(m, n), {}, {}};
  search.visit(0);

  // Explicit construction: each kept point takes its own mass plus its share
  // of the neighbouring gaps (all of a boundary gap, half of an inner one).
  const auto& kept = search.best;
  const long size = static_cast<long>(n);
  std::vector<double> values;
  std::vector<double> masses;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const long at = kept[k];
    const long before = k == 0 ? -1 : kept[k - 1];
    const long after = k + 1 == kept.size() ? size : kept[k + 1];
    double left = mass_between(probs, before, at);
    double right = mass_between(probs, at, after);
    if (before != -1) left /= 2.0;
    if (after != size) right /= 2.0;
    values.push_back(dist.value(static_cast<std::size_t>(at)));
    masses.push_back(probs[static_cast<std::size_t>(at)] + left + right);
  }

  ReductionResult result{DiscreteDistribution(std::move(values), std::move(masses)),
                         SupportSelection{}, search.best_eps};
  result.selection.indices.assign(kept.begin(), kept.end());
  result.selection.epsilon = search.best_eps;
  return result;
}

double naive_distance(const DiscreteDistribution& a,
                      const DiscreteDistribution& b) {
  auto cdf_at = [](const DiscreteDistribution& d, double t) {
    double f = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d.value(k) <= t) f += d.prob(k);
    }
    return f;
  };
  double sup = 0.0;
  for (const DiscreteDistribution* d : {&a, &b}) {
    for (double t : d->values()) {
      sup = std::max(sup, std::abs(cdf_at(a, t) - cdf_at(b, t)));
    }
  }
  return sup;
}

}  // namespace klm
