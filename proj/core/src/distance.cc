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
#include "klm/distance.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "klm/cumulative.h"

namespace klm {

namespace {

// Calls visit(F_a(t), F_b(t)) at every point t of the merged support, in
// increasing order. Between consecutive merged points both CDFs are constant,
// so the left limit at a point equals the value at the previous point and is
// visited there.
template <typename Visit>
void walk_merged(const DiscreteDistribution& a, const DiscreteDistribution& b,
                 Visit&& visit) {
  const CumulativeView ca(a);
  const CumulativeView cb(b);
  const auto va = a.values();
  const auto vb = b.values();
  std::size_t i = 0;
  std::size_t j = 0;
  double fa = 0.0;
  double fb = 0.0;
  while (i < va.size() || j < vb.size()) {
    const double t = j == vb.size() || (i < va.size() && va[i] <= vb[j])
                         ? va[i]
                         : vb[j];
    if (i < va.size() && va[i] == t) fa = ca.at(i++);
    if (j < vb.size() && vb[j] == t) fb = cb.at(j++);
    visit(fa, fb);
  }
}

}  // namespace

double kolmogorov_distance(const DiscreteDistribution& a,
                           const DiscreteDistribution& b) {
  double sup = 0.0;
  walk_merged(a, b, [&](double fa, double fb) {
    sup = std::max(sup, std::abs(fa - fb));
  });
  return sup;
}

OneSidedDistance one_sided_distance(const DiscreteDistribution& source,
                                    const DiscreteDistribution& approx) {
  OneSidedDistance result;
  walk_merged(source, approx, [&](double fs, double fa) {
    result.excess = std::max(result.excess, fa - fs);
    if (fa < fs - 1e-12) result.dominates = false;
  });
  return result;
}

DiscreteDistribution project_to_support(const DiscreteDistribution& other,
                                        const DiscreteDistribution& target) {
  const auto tv = target.values();
  const auto ov = other.values();
  const auto op = other.probs();
  std::vector<CompensatedSum> mass(tv.size());
  for (std::size_t k = 0; k < ov.size(); ++k) {
    // Smallest target point >= ov[k]; everything above the last target point
    // lands on it.
    auto it = std::lower_bound(tv.begin(), tv.end(), ov[k]);
    std::size_t slot = static_cast<std::size_t>(it - tv.begin());
    if (slot == tv.size()) slot = tv.size() - 1;
    mass[slot].add(op[k]);
  }
  std::vector<double> values;
  std::vector<double> probs;
  for (std::size_t i = 0; i < tv.size(); ++i) {
    const double p = mass[i].value();
    if (p > 0.0) {
      values.push_back(tv[i]);
      probs.push_back(p);
    }
  }
  return DiscreteDistribution(std::move(values), std::move(probs));
}

}  // namespace klm
