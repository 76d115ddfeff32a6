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
#include "klm/cumulative.h"

#include <algorithm>

namespace klm {

CumulativeView::CumulativeView(const DiscreteDistribution& dist)
    : cum_(dist.size()) {
  CompensatedSum sum;
  const auto probs = dist.probs();
  double previous = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    sum.add(probs[i]);
    // Compensation can in principle step back by an ulp; keep F monotone.
    previous = std::max(previous, sum.value());
    cum_[i] = previous;
  }
}

}  // namespace klm
