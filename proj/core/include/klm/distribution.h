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

#ifndef KLM_DISTRIBUTION_H_
#define KLM_DISTRIBUTION_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace klm {

// Mass tolerance accepted on construction: |sum(probs) - 1| <= kMassTolerance.
inline constexpr double kMassTolerance = 1e-9;

enum class MassPolicy {
  kStrict,       // reject inputs whose mass is outside kMassTolerance
  kRenormalize,  // divide by the actual sum
};

// A finite discrete random variable: strictly increasing finite support
// values, each carrying strictly positive probability, total mass 1 (within
// kMassTolerance). Immutable after construction.
class DiscreteDistribution {
 public:
  // Validates every invariant; throws klm::Error on violation. Inputs must
  // already be sorted and merged (use make_distribution for raw pairs).
  DiscreteDistribution(std::vector<double> values, std::vector<double> probs);

  static DiscreteDistribution point_mass(double value);

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<const double> probs() const { return probs_; }
  double value(std::size_t i) const { return values_[i]; }
  double prob(std::size_t i) const { return probs_[i]; }

  double min_value() const { return values_.front(); }
  double max_value() const { return values_.back(); }

  // Compensated sum of the probabilities.
  double total_mass() const;

  // F(t) = P(X <= t), by binary search and compensated summation. O(n);
  // build a CumulativeView for repeated queries.
  double cdf(double t) const;

  friend bool operator==(const DiscreteDistribution&,
                         const DiscreteDistribution&) = default;

 private:
  std::vector<double> values_;
  std::vector<double> probs_;
};

// Builds a distribution from unsorted (value, prob) pairs. Duplicate values
// (exact floating-point equality) are merged, zero-probability entries are
// dropped. Errors: kEmptyDistribution, kBadMass, kNonFiniteValue.
DiscreteDistribution make_distribution(
    std::span<const std::pair<double, double>> pairs,
    MassPolicy policy = MassPolicy::kStrict);

// Same as above for parallel value/probability arrays.
DiscreteDistribution make_distribution(std::span<const double> values,
                                       std::span<const double> probs,
                                       MassPolicy policy = MassPolicy::kStrict);

// Neumaier-compensated summation.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace klm

#endif  // KLM_DISTRIBUTION_H_
