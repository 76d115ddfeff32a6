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
#ifndef KLM_COMBINATORS_H_
#define KLM_COMBINATORS_H_

#include "klm/distribution.h"

namespace klm {

// All combinators assume independent operands. Outputs are scaled by the
// product of the operand masses so they sum to 1 to rounding.

// Distribution of a + b. Equal sums are merged by exact value equality.
DiscreteDistribution convolve(const DiscreteDistribution& a,
                              const DiscreteDistribution& b);

// Distribution of max(a, b): F(t) = F_a(t) * F_b(t).
DiscreteDistribution max_of(const DiscreteDistribution& a,
                            const DiscreteDistribution& b);

// Distribution of min(a, b): 1 - F(t) = (1 - F_a(t)) * (1 - F_b(t)).
DiscreteDistribution min_of(const DiscreteDistribution& a,
                            const DiscreteDistribution& b);

}  // namespace klm

#endif  // KLM_COMBINATORS_H_
