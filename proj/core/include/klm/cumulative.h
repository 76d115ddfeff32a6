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

#ifndef KLM_CUMULATIVE_H_
#define KLM_CUMULATIVE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "klm/distribution.h"

namespace klm {

// Prefix-sum CDF over a distribution. cum()[i] = F(x_i), computed with
// compensated summation and clamped to be nondecreasing. Interval masses are
// O(1) differences of prefix sums.
class CumulativeView {
 public:
  explicit CumulativeView(const DiscreteDistribution& dist);

  std::size_t size() const { return cum_.size(); }
  std::span<const double> cum() const { return cum_; }

  // F(x_i).
  double at(std::size_t i) const { return cum_[i]; }
  // F(x_i^-): mass strictly below x_i.
  double below(std::size_t i) const { return i == 0 ? 0.0 : cum_[i - 1]; }
  // F(+inf), the stored total mass.
  double total() const { return cum_.back(); }
  // P(x_i < X < x_j) for i < j.
  double open_mass(std::size_t i, std::size_t j) const {
    return cum_[j - 1] - cum_[i];
  }
  // P(X > x_i).
  double mass_above(std::size_t i) const { return total() - cum_[i]; }

 private:
  std::vector<double> cum_;
};

}  // namespace klm

#endif  // KLM_CUMULATIVE_H_
