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
#include "klm/distribution.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "klm/combinators.h"
#include "klm/cumulative.h"
#include "klm/distance.h"
#include "klm/error.h"
#include "klm/oracle.h"
#include "klm/random.h"
#include "klm/sampling.h"
#include "test_util.h"

namespace klm {
namespace {

using ::klm::testing::random_distribution;
using ::klm::testing::uniform_on;

DiscreteDistribution dist(std::vector<double> values, std::vector<double> probs) {
  return make_distribution(values, probs);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected klm::Error";
  return ErrorCode::kIo;
}

void expect_valid(const DiscreteDistribution& d) {
  ASSERT_GE(d.size(), 1u);
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_GT(d.prob(i), 0.0);
    if (i > 0) EXPECT_LT(d.value(i - 1), d.value(i));
  }
  EXPECT_NEAR(d.total_mass(), 1.0, 1e-9);
}

TEST(MakeDistributionTest, SortsPairs) {
  const std::vector<std::pair<double, double>> pairs = {{2, 0.5}, {1, 0.5}};
  const auto d = make_distribution(pairs);
  EXPECT_EQ(std::vector<double>(d.values().begin(), d.values().end()),
            (std::vector<double>{1, 2}));
  EXPECT_EQ(std::vector<double>(d.probs().begin(), d.probs().end()),
            (std::vector<double>{0.5, 0.5}));
}

TEST(MakeDistributionTest, MergesDuplicates) {
  const auto d = dist({1, 1}, {0.5, 0.5});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.value(0), 1.0);
  EXPECT_EQ(d.prob(0), 1.0);
}

TEST(MakeDistributionTest, DropsZeroMass) {
  const auto d = dist({1, 2, 3}, {0.3, 0.0, 0.7});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.value(0), 1.0);
  EXPECT_EQ(d.value(1), 3.0);
  EXPECT_EQ(d.prob(0), 0.3);
  EXPECT_EQ(d.prob(1), 0.7);
}

TEST(MakeDistributionTest, Errors) {
  EXPECT_EQ(code_of([] { dist({}, {}); }), ErrorCode::kEmptyDistribution);
  EXPECT_EQ(code_of([] { dist({1, 2}, {0, 0}); }), ErrorCode::kEmptyDistribution);
  EXPECT_EQ(code_of([] { dist({1, 2}, {0.5, 0.4}); }), ErrorCode::kBadMass);
  EXPECT_EQ(code_of([] { dist({1, 2}, {1.5, -0.5}); }), ErrorCode::kBadMass);
  EXPECT_EQ(code_of([] { dist({1, NAN}, {0.5, 0.5}); }), ErrorCode::kNonFiniteValue);
  EXPECT_EQ(code_of([] { dist({1, INFINITY}, {0.5, 0.5}); }),
            ErrorCode::kNonFiniteValue);
  EXPECT_EQ(code_of([] { DiscreteDistribution({2, 1}, {0.5, 0.5}); }),
            ErrorCode::kBadSelection);
}

TEST(MakeDistributionTest, ToleranceAndRenormalize) {
  EXPECT_NO_THROW(dist({1, 2}, {0.5, 0.5 + 5e-10}));
  const std::vector<double> values = {1, 2, 3};
  const std::vector<double> weights = {1, 2, 5};
  const auto d = make_distribution(values, weights, MassPolicy::kRenormalize);
  EXPECT_DOUBLE_EQ(d.prob(0), 0.125);
  EXPECT_DOUBLE_EQ(d.prob(2), 0.625);
}

TEST(CumulativeViewTest, PrefixSumsAndIntervals) {
  const auto d = uniform_on(4);
  const CumulativeView view(d);
  EXPECT_EQ(view.at(0), 0.25);
  EXPECT_EQ(view.total(), 1.0);
  EXPECT_EQ(view.below(0), 0.0);
  EXPECT_EQ(view.below(2), 0.5);
  EXPECT_EQ(view.open_mass(0, 3), 0.5);
  EXPECT_EQ(view.open_mass(1, 2), 0.0);
  EXPECT_EQ(view.mass_above(1), 0.5);
}

TEST(CumulativeViewTest, CompensatedTotalOnLongInputs) {
  Xoshiro256StarStar rng(3);
  const auto d = random_distribution(rng, 100000);
  const CumulativeView view(d);
  EXPECT_NEAR(view.total(), 1.0, 1e-12);
  for (std::size_t i = 1; i < view.size(); ++i) {
    ASSERT_LE(view.at(i - 1), view.at(i));
  }
}

TEST(KolmogorovDistanceTest, Examples) {
  const auto x = uniform_on(2);
  EXPECT_EQ(kolmogorov_distance(x, x), 0.0);
  EXPECT_EQ(kolmogorov_distance(DiscreteDistribution::point_mass(0),
                                DiscreteDistribution::point_mass(1)),
            1.0);
  EXPECT_EQ(kolmogorov_distance(x, DiscreteDistribution::point_mass(1)), 0.5);
}

TEST(KolmogorovDistanceTest, MatchesNaiveAndIsAMetric) {
  Xoshiro256StarStar rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_distribution(rng, 1 + rng.below(12));
    const auto b = random_distribution(rng, 1 + rng.below(12));
    const auto c = random_distribution(rng, 1 + rng.below(12));
    const double ab = kolmogorov_distance(a, b);
    EXPECT_NEAR(ab, naive_distance(a, b), 1e-12);
    EXPECT_EQ(ab, kolmogorov_distance(b, a));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0 + 1e-12);
    EXPECT_LE(ab, kolmogorov_distance(a, c) + kolmogorov_distance(c, b) + 1e-12);
    EXPECT_LE(kolmogorov_distance(a, a), 1e-12);
  }
}

TEST(KolmogorovDistanceTest, SharedSupportDifferentMasses) {
  // Same support, different masses: positive distance.
  const auto a = dist({1, 2, 3}, {0.2, 0.3, 0.5});
  const auto b = dist({1, 2, 3}, {0.3, 0.3, 0.4});
  EXPECT_NEAR(kolmogorov_distance(a, b), 0.1, 1e-15);
}

TEST(OneSidedDistanceTest, Examples) {
  const auto x = uniform_on(3);
  const auto self = one_sided_distance(x, x);
  EXPECT_EQ(self.excess, 0.0);
  EXPECT_TRUE(self.dominates);

  const auto d0 = DiscreteDistribution::point_mass(0);
  const auto d1 = DiscreteDistribution::point_mass(1);
  const auto earlier = one_sided_distance(d1, d0);
  EXPECT_EQ(earlier.excess, 1.0);
  EXPECT_TRUE(earlier.dominates);
  const auto later = one_sided_distance(d0, d1);
  EXPECT_EQ(later.excess, 0.0);
  EXPECT_FALSE(later.dominates);
}

TEST(ProjectToSupportTest, Examples) {
  const auto target = uniform_on(3);
  EXPECT_EQ(project_to_support(DiscreteDistribution::point_mass(2.5), target),
            DiscreteDistribution::point_mass(3));

  const auto inside = dist({1, 3}, {0.4, 0.6});
  EXPECT_EQ(project_to_support(inside, target), inside);

  const auto pair = uniform_on(2);
  const auto projected = project_to_support(DiscreteDistribution::point_mass(0), pair);
  EXPECT_EQ(projected, DiscreteDistribution::point_mass(1));
  EXPECT_EQ(kolmogorov_distance(pair, projected), 0.5);
  EXPECT_EQ(kolmogorov_distance(pair, DiscreteDistribution::point_mass(0)), 1.0);
}

TEST(ProjectToSupportTest, AboveLastPointGoesToLast) {
  const auto target = uniform_on(3);
  EXPECT_EQ(project_to_support(DiscreteDistribution::point_mass(10), target),
            DiscreteDistribution::point_mass(3));
}

TEST(ProjectToSupportTest, NeverIncreasesDistance) {
  Xoshiro256StarStar rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto target = random_distribution(rng, 1 + rng.below(15));
    const auto other = random_distribution(rng, 1 + rng.below(15));
    const auto projected = project_to_support(other, target);
    expect_valid(projected);
    for (double v : projected.values()) {
      EXPECT_TRUE(std::binary_search(target.values().begin(), target.values().end(), v));
    }
    EXPECT_LE(kolmogorov_distance(target, projected),
              kolmogorov_distance(target, other) + 1e-12);
  }
}

TEST(ConvolveTest, Examples) {
  EXPECT_EQ(convolve(DiscreteDistribution::point_mass(2),
                     DiscreteDistribution::point_mass(5)),
            DiscreteDistribution::point_mass(7));
  const auto coin = dist({0, 1}, {0.5, 0.5});
  EXPECT_EQ(convolve(coin, coin), dist({0, 1, 2}, {0.25, 0.5, 0.25}));
  const auto u = uniform_on(2);
  EXPECT_EQ(convolve(u, u), dist({2, 3, 4}, {0.25, 0.5, 0.25}));
}

TEST(ConvolveTest, CommutativeAssociativeMassPreserving) {
  Xoshiro256StarStar rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    // Integer supports so that sums collide and merge.
    auto lattice = [&] {
      std::vector<double> v, p;
      for (int i = 0, n = 1 + static_cast<int>(rng.below(6)); i < n; ++i) {
        v.push_back(static_cast<double>(rng.below(10)));
        p.push_back(rng.uniform_open());
      }
      return make_distribution(v, p, MassPolicy::kRenormalize);
    };
    const auto a = lattice(), b = lattice(), c = lattice();
    const auto ab = convolve(a, b);
    const auto ba = convolve(b, a);
    ASSERT_EQ(ab.size(), ba.size());
    for (std::size_t i = 0; i < ab.size(); ++i) {
      EXPECT_EQ(ab.value(i), ba.value(i));
      EXPECT_NEAR(ab.prob(i), ba.prob(i), 1e-12);
    }
    const auto left = convolve(ab, c);
    const auto right = convolve(a, convolve(b, c));
    ASSERT_EQ(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
      EXPECT_EQ(left.value(i), right.value(i));
      EXPECT_NEAR(left.prob(i), right.prob(i), 1e-12);
    }
    EXPECT_NEAR(left.total_mass(), 1.0, 1e-12);
  }
}

TEST(MaxMinTest, Examples) {
  EXPECT_EQ(max_of(DiscreteDistribution::point_mass(1),
                   DiscreteDistribution::point_mass(2)),
            DiscreteDistribution::point_mass(2));
  const auto coin = dist({0, 1}, {0.5, 0.5});
  EXPECT_EQ(max_of(coin, coin), dist({0, 1}, {0.25, 0.75}));
  EXPECT_EQ(min_of(coin, coin), dist({0, 1}, {0.75, 0.25}));
}

TEST(MaxMinTest, CdfProductIdentities) {
  Xoshiro256StarStar rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_distribution(rng, 1 + rng.below(10));
    const auto b = random_distribution(rng, 1 + rng.below(10));
    const auto hi = max_of(a, b);
    const auto lo = min_of(a, b);
    expect_valid(hi);
    expect_valid(lo);
    for (const auto* d : {&a, &b}) {
      for (double t : d->values()) {
        EXPECT_NEAR(hi.cdf(t), a.cdf(t) * b.cdf(t), 1e-12);
        EXPECT_NEAR(1.0 - lo.cdf(t), (1.0 - a.cdf(t)) * (1.0 - b.cdf(t)), 1e-12);
      }
    }
  }
}

TEST(SampleEmpiricalTest, PointMassAndDeterminism) {
  const auto c = DiscreteDistribution::point_mass(4.5);
  EXPECT_EQ(sample_empirical(c, 17, 99), c);

  Xoshiro256StarStar rng(1);
  const auto x = random_distribution(rng, 100);
  EXPECT_EQ(sample_empirical(x, 1000, 42), sample_empirical(x, 1000, 42));
  EXPECT_NE(sample_empirical(x, 1000, 42), sample_empirical(x, 1000, 43));
  EXPECT_THROW(sample_empirical(x, 0, 1), Error);
}

TEST(SampleEmpiricalTest, ConvergesAtSqrtRate) {
  // DKW: P(d_K > e) <= 2 exp(-2 s e^2); e = 0.02, s = 1e4 gives ~7e-4.
  Xoshiro256StarStar rng(2);
  const auto x = random_distribution(rng, 100);
  int above = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto empirical = sample_empirical(x, 10000, seed);
    expect_valid(empirical);
    if (kolmogorov_distance(empirical, x) >= 0.02) ++above;
  }
  EXPECT_EQ(above, 0);
}

TEST(RandomTest, ReferenceOutput) {
  // First outputs of xoshiro256** for state seeded by SplitMix64(0), checked
  // against the reference C implementation.
  Xoshiro256StarStar rng(0);
  EXPECT_EQ(rng(), 0x99ec5f36cb75f2b4ULL);
  EXPECT_EQ(rng(), 0xbf6e1f784956452aULL);
  EXPECT_EQ(rng(), 0x1a5f849d4933e6e0ULL);
}

}  // namespace
}  // namespace klm
