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
#ifndef KLM_ORACLE_H_
#define KLM_ORACLE_H_

#include <cstddef>

#include "klm/distribution.h"
#include "klm/reduce.h"

namespace klm {

// Largest support accepted by brute_force_reduce.
inline constexpr std::size_t kOracleMaxSupport = 22;

// Reference implementations that share nothing with the fast path beyond the
// DiscreteDistribution type: every quantity is recomputed from the raw
// probabilities by direct summation.

// Exhaustive search over every subset S of the support with 1 <= |S| <= m,
// visited in lexicographic order; the first subset reaching the minimum
// eps(X, S) wins. Throws kTooLarge when n > kOracleMaxSupport and kBadM for
// m == 0.
ReductionResult brute_force_reduce(const DiscreteDistribution& dist,
                                   std::size_t m);

// sup_t |F_a(t) - F_b(t)| evaluated by summing each CDF from scratch at every
// point of the merged support. Quadratic.
double naive_distance(const DiscreteDistribution& a,
                      const DiscreteDistribution& b);

}  // namespace klm

#endif  // KLM_ORACLE_H_
