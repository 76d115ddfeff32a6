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
#ifndef KLM_DISTANCE_H_
#define KLM_DISTANCE_H_

#include "klm/distribution.h"

namespace klm {

// d_K(a, b) = sup_t |F_a(t) - F_b(t)|. Both CDFs are right-continuous step
// functions, so the supremum is attained at a jump of one of them; a single
// merged walk over the two supports evaluates every jump and left limit.
double kolmogorov_distance(const DiscreteDistribution& a,
                           const DiscreteDistribution& b);

struct OneSidedDistance {
  // sup_t (F_approx(t) - F_source(t)), never negative (t -> -inf gives 0).
  double excess = 0.0;
  // F_approx(t) >= F_source(t) - 1e-12 for every t.
  bool dominates = true;
};

// The non-symmetric measure used for one-sided (deadline-safe)
// approximations. Used to evaluate baselines.
OneSidedDistance one_sided_distance(const DiscreteDistribution& source,
                                    const DiscreteDistribution& approx);

// Moves the mass of `other` onto support(target): mass in (x_{i-1}, x_i]
// goes to x_i, everything above x_{n-1} goes to x_n. The result is never
// farther from `target` than `other` is.
DiscreteDistribution project_to_support(const DiscreteDistribution& other,
                                        const DiscreteDistribution& target);

}  // namespace klm

#endif  // KLM_DISTANCE_H_
