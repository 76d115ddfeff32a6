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
#include "klm/sampling.h"

#include <algorithm>
#include <vector>

#include "klm/cumulative.h"
#include "klm/error.h"
#include "klm/random.h"

namespace klm {

DiscreteDistribution sample_empirical(const DiscreteDistribution& dist,
                                      std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw Error(ErrorCode::kBadM, "sample count must be >= 1");
  const CumulativeView view(dist);
  const auto cum = view.cum();
  const double total = view.total();
  Xoshiro256StarStar rng(seed);
  std::vector<std::size_t> counts(dist.size(), 0);
  for (std::size_t s = 0; s < samples; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;
    ++counts[static_cast<std::size_t>(it - cum.begin())];
  }
  std::vector<double> values;
  std::vector<double> probs;
  const double unit = 1.0 / static_cast<double>(samples);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    values.push_back(dist.value(i));
    probs.push_back(static_cast<double>(counts[i]) * unit);
  }
  return DiscreteDistribution(std::move(values), std::move(probs));
}

}  // namespace klm
