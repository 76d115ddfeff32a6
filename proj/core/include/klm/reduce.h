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
#ifndef KLM_REDUCE_H_
#define KLM_REDUCE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "klm/cumulative.h"
#include "klm/distribution.h"

namespace klm {

// A position in the support extended with the sentinels -inf and +inf.
class Anchor {
 public:
  static constexpr Anchor minus_infinity() { return Anchor(Kind::kMinusInf, 0); }
  static constexpr Anchor plus_infinity() { return Anchor(Kind::kPlusInf, 0); }
  static constexpr Anchor at(std::size_t index) {
    return Anchor(Kind::kIndex, index);
  }

  constexpr bool is_minus_infinity() const { return kind_ == Kind::kMinusInf; }
  constexpr bool is_plus_infinity() const { return kind_ == Kind::kPlusInf; }
  constexpr bool is_index() const { return kind_ == Kind::kIndex; }
  constexpr std::size_t index() const { return index_; }

 private:
  enum class Kind { kMinusInf, kIndex, kPlusInf };
  constexpr Anchor(Kind kind, std::size_t index) : kind_(kind), index_(index) {}

  Kind kind_;
  std::size_t index_;
};

// Weight of the segment between two consecutive selected points:
// P(lo < X < hi) when either end is a sentinel, P(lo < X < hi) / 2 otherwise.
// Requires lo < hi in the extended order.
double segment_weight(const CumulativeView& cdf, Anchor lo, Anchor hi);

// S = {x_{i_1} < ... < x_{i_m}} as strictly increasing indices into the
// source support, together with eps(X, S).
struct SupportSelection {
  std::vector<std::size_t> indices;
  double epsilon = 0.0;
};

struct ReductionResult {
  DiscreteDistribution approx;
  SupportSelection selection;
  // Certified d_K(source, approx); equals selection.epsilon.
  double distance = 0.0;
};

// eps(X, S): the largest segment weight over the |S| + 1 segments cut by S,
// both boundary segments included. This is the smallest d_K achievable by
// any distribution supported on S. Throws kBadSelection for an empty or
// non-increasing index list.
double epsilon_for_support(const DiscreteDistribution& dist,
                           std::span<const std::size_t> indices);
double epsilon_for_support(const CumulativeView& cdf,
                           std::span<const std::size_t> indices);

// The distribution on S at distance exactly eps(X, S):
// f'(x_i) = w(x_{i-1}, x_i) + w(x_i, x_{i+1}) + f(x_i).
DiscreteDistribution construct_on_support(const DiscreteDistribution& dist,
                                          std::span<const std::size_t> indices);

// The support set S, |S| <= m, minimizing eps(X, S). Ties resolve to the
// lexicographically smallest index sequence. Throws kBadM for m == 0.
SupportSelection min_bottleneck_support(const DiscreteDistribution& dist,
                                        std::size_t m);

// Optimal m-approximation under the Kolmogorov distance: no distribution with
// at most m support points is closer to `dist`. For m >= n returns `dist`
// itself at distance 0. Throws kBadM for m == 0.
ReductionResult reduce(const DiscreteDistribution& dist, std::size_t m);

}  // namespace klm

#endif  // KLM_REDUCE_H_
