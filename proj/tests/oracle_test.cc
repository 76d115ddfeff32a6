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
#include "klm/oracle.h"

#include <gtest/gtest.h>

#include <vector>

#include "klm/distance.h"
#include "klm/error.h"
#include "klm/random.h"
#include "test_util.h"

namespace klm {
namespace {

using ::klm::testing::random_distribution;
using ::klm::testing::uniform_on;

using Indices = std::vector<std::size_t>;

TEST(BruteForceReduceTest, Examples) {
  const auto u4 = uniform_on(4);
  const auto r = brute_force_reduce(u4, 2);
  EXPECT_EQ(r.distance, 0.25);
  EXPECT_EQ(r.selection.indices, (Indices{0, 2}));
  EXPECT_EQ(r.approx, make_distribution(std::vector<double>{1, 3},
                                        std::vector<double>{0.375, 0.625}));

  const auto full = brute_force_reduce(u4, 4);
  EXPECT_EQ(full.distance, 0.0);
  EXPECT_EQ(full.approx, u4);
  EXPECT_EQ(brute_force_reduce(u4, 9).distance, 0.0);

  const auto skewed = make_distribution(std::vector<double>{1, 2},
                                        std::vector<double>{0.1, 0.9});
  const auto one = brute_force_reduce(skewed, 1);
  EXPECT_EQ(one.selection.indices, (Indices{1}));
  EXPECT_DOUBLE_EQ(one.distance, 0.1);
}

TEST(BruteForceReduceTest, Errors) {
  EXPECT_THROW(brute_force_reduce(uniform_on(3), 0), Error);
  try {
    brute_force_reduce(uniform_on(kOracleMaxSupport + 1), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_NO_THROW(brute_force_reduce(uniform_on(kOracleMaxSupport), 1));
}

TEST(BruteForceReduceTest, OwnConstructionIsCertified) {
  Xoshiro256StarStar rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_distribution(rng, 1 + rng.below(9));
    const std::size_t m = 1 + rng.below(x.size());
    const auto r = brute_force_reduce(x, m);
    EXPECT_NEAR(naive_distance(x, r.approx), r.distance, 1e-12);
    EXPECT_LE(r.selection.indices.size(), m);
  }
}

TEST(NaiveDistanceTest, Examples) {
  EXPECT_EQ(naive_distance(DiscreteDistribution::point_mass(0),
                           DiscreteDistribution::point_mass(1)),
            1.0);
  EXPECT_EQ(naive_distance(uniform_on(2), DiscreteDistribution::point_mass(1)), 0.5);
  Xoshiro256StarStar rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_distribution(rng, 1 + rng.below(20));
    const auto b = random_distribution(rng, 1 + rng.below(20));
    EXPECT_NEAR(naive_distance(a, b), kolmogorov_distance(a, b), 1e-12);
  }
}

}  // namespace
}  // namespace klm
