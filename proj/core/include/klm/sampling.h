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
#ifndef KLM_SAMPLING_H_
#define KLM_SAMPLING_H_

#include <cstddef>
#include <cstdint>

#include "klm/distribution.h"

namespace klm {

// Empirical distribution of `samples` i.i.d. draws from `dist` (mass 1/s per
// draw, duplicates merged). Draws use inverse-CDF lookup driven by
// Xoshiro256StarStar(seed), so the output is a pure function of the inputs.
DiscreteDistribution sample_empirical(const DiscreteDistribution& dist,
                                      std::size_t samples, std::uint64_t seed);

}  // namespace klm

#endif  // KLM_SAMPLING_H_
