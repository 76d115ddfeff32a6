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
#include "klm/reduce.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "klm/bottleneck.h"
#include "klm/error.h"

namespace klm {

namespace {

// Edge weights of the support graph, on raw indices. Every weight used by the
// search and by the construction goes through these three functions so that
// exact comparisons against the optimum stay consistent.
struct SegmentWeights {
  const CumulativeView& cdf;

  double entry(std::size_t j) const { return cdf.below(j); }
  double inner(std::size_t i, std::size_t j) const {
    return cdf.open_mass(i, j) * 0.5;
  }
  double exit(std::size_t i) const { return cdf.mass_above(i); }
};

void check_selection(std::span<const std::size_t> indices, std::size_t n) {
  if (indices.empty()) {
    throw Error(ErrorCode::kBadSelection, "support selection is empty");
  }
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= n) {
      throw Error(ErrorCode::kBadSelection,
                  "index " + std::to_string(indices[k]) + " out of range");
    }
    if (k > 0 && indices[k - 1] >= indices[k]) {
      throw Error(ErrorCode::kBadSelection, "indices not strictly increasing");
    }
  }
}

void check_budget(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::kBadM, "m must be >= 1");
}

}  // namespace

double segment_weight(const CumulativeView& cdf, Anchor lo, Anchor hi) {
  const SegmentWeights w{cdf};
  if (lo.is_minus_infinity()) {
    // The -inf -> +inf segment spans everything.
    return hi.is_plus_infinity() ? cdf.total() : w.entry(hi.index());
  }
  if (hi.is_plus_infinity()) return w.exit(lo.index());
  return w.inner(lo.index(), hi.index());
}

double epsilon_for_support(const CumulativeView& cdf,
                           std::span<const std::size_t> indices) {
  check_selection(indices, cdf.size());
  const SegmentWeights w{cdf};
  double eps = std::max(w.entry(indices.front()), w.exit(indices.back()));
  for (std::size_t k = 1; k < indices.size(); ++k) {
    eps = std::max(eps, w.inner(indices[k - 1], indices[k]));
  }
  return eps;
}

double epsilon_for_support(const DiscreteDistribution& dist,
                           std::span<const std::size_t> indices) {
  return epsilon_for_support(CumulativeView(dist), indices);
}

DiscreteDistribution construct_on_support(const DiscreteDistribution& dist,
                                          std::span<const std::size_t> indices) {
  const CumulativeView cdf(dist);
  check_selection(indices, cdf.size());
  const SegmentWeights w{cdf};
  const std::size_t m = indices.size();
  std::vector<double> values(m);
  std::vector<double> probs(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t i = indices[k];
    const double left = k == 0 ? w.entry(i) : w.inner(indices[k - 1], i);
    const double right = k + 1 == m ? w.exit(i) : w.inner(i, indices[k + 1]);
    values[k] = dist.value(i);
    probs[k] = left + right + dist.prob(i);
  }
  return DiscreteDistribution(std::move(values), std::move(probs));
}

SupportSelection min_bottleneck_support(const DiscreteDistribution& dist,
                                        std::size_t m) {
  check_budget(m);
  const std::size_t n = dist.size();
  SupportSelection selection;
  if (m >= n) {
    selection.indices.resize(n);
    std::iota(selection.indices.begin(), selection.indices.end(), 0);
    selection.epsilon = 0.0;
    return selection;
  }
  const CumulativeView cdf(dist);
  const SegmentWeights w{cdf};
  BottleneckPath path = min_bottleneck_path(
      n, m, [&](std::size_t j) { return w.entry(j); },
      [&](std::size_t i, std::size_t j) { return w.inner(i, j); },
      [&](std::size_t i) { return w.exit(i); });
  selection.indices = std::move(path.interior);
  selection.epsilon = path.bottleneck;
  return selection;
}

ReductionResult reduce(const DiscreteDistribution& dist, std::size_t m) {
  check_budget(m);
  if (m >= dist.size()) {
    SupportSelection identity = min_bottleneck_support(dist, m);
    return ReductionResult{dist, std::move(identity), 0.0};
  }
  SupportSelection selection = min_bottleneck_support(dist, m);
  DiscreteDistribution approx = construct_on_support(dist, selection.indices);
  const double distance = selection.epsilon;
  return ReductionResult{std::move(approx), std::move(selection), distance};
}

}  // namespace klm
