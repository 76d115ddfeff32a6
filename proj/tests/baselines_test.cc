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
#include "klm/baselines.h"

#include <gtest/gtest.h>

#include <vector>

#include "klm/distance.h"
#include "klm/error.h"
#include "klm/random.h"
#include "klm/reduce.h"
#include "test_util.h"

namespace klm {
namespace {

using ::klm::testing::random_distribution;
using ::klm::testing::uniform_on;

DiscreteDistribution dist(std::vector<double> values, std::vector<double> probs) {
  return make_distribution(values, probs);
}

// Every one-sided approximation with support within support(x), at most m
// points and containing the minimum; the smallest excess. Test-only oracle.
double brute_force_one_sided(const DiscreteDistribution& x, std::size_t m) {
  const std::size_t n = x.size();
  double best = 1.0;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {  // bit 0 always set
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > m) continue;
    // Mass shifted down onto the nearest kept point at or below.
    double worst = 0.0, absorbed = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      if (mask & (1u << i)) {
        absorbed = 0.0;
      } else {
        absorbed += x.prob(i);
        worst = std::max(worst, absorbed);
      }
    }
    best = std::min(best, worst);
  }
  return best;
}

TEST(TrimEpsilonTest, Examples) {
  const auto x = dist({1, 2, 3}, {0.2, 0.3, 0.5});
  const auto same = trim_epsilon(x, 0.1);
  EXPECT_EQ(same.approx, x);
  EXPECT_EQ(same.two_sided_error, 0.0);
  EXPECT_EQ(same.one_sided_error, 0.0);

  const auto u4 = uniform_on(4);
  const auto grouped = trim_epsilon(u4, 0.25);
  EXPECT_EQ(grouped.approx, dist({1, 3}, {0.5, 0.5}));
  EXPECT_EQ(grouped.one_sided_error, 0.25);
  EXPECT_TRUE(grouped.one_sided_valid);

  const auto all = trim_epsilon(x, 0.8);
  EXPECT_EQ(all.approx, DiscreteDistribution::point_mass(1));
}

TEST(TrimEpsilonTest, RejectsBadEps) {
  const auto u4 = uniform_on(4);
  for (double eps : {0.0, -0.5, 1.0, 2.0}) {
    try {
      trim_epsilon(u4, eps);
      FAIL() << eps;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadEps);
    }
  }
}

TEST(TrimEpsilonTest, OneSidedWithinEps) {
  Xoshiro256StarStar rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_distribution(rng, 1 + rng.below(60));
    const double eps = 0.001 + 0.99 * rng.uniform();
    const auto r = trim_epsilon(x, eps);
    EXPECT_TRUE(r.one_sided_valid);
    EXPECT_LE(r.one_sided_error, eps + 1e-12);
    EXPECT_EQ(r.approx.min_value(), x.min_value());
    EXPECT_NEAR(r.two_sided_error, r.one_sided_error, 1e-12);
  }
}

TEST(TrimWithBudgetTest, StaysWithinBudget) {
  Xoshiro256StarStar rng(67);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_distribution(rng, 1 + rng.below(100));
    const std::size_t m = 1 + rng.below(30);
    const auto r = trim_with_budget(x, m);
    EXPECT_LE(r.approx.size(), m);
    EXPECT_TRUE(r.one_sided_valid);
  }
  EXPECT_THROW(trim_with_budget(uniform_on(3), 0), Error);
  EXPECT_EQ(trim_with_budget(uniform_on(3), 1).approx,
            DiscreteDistribution::point_mass(1));
}

TEST(OptTrimTest, Examples) {
  Xoshiro256StarStar rng(71);
  const auto x = random_distribution(rng, 6);
  const auto same = opt_trim(x, 6);
  EXPECT_EQ(same.approx, x);
  EXPECT_EQ(same.two_sided_error, 0.0);

  const auto u4 = uniform_on(4);
  const auto two = opt_trim(u4, 2);
  EXPECT_EQ(two.approx, dist({1, 3}, {0.5, 0.5}));
  EXPECT_EQ(two.one_sided_error, 0.25);
  EXPECT_EQ(two.one_sided_error, brute_force_one_sided(u4, 2));
  EXPECT_TRUE(two.one_sided_valid);

  EXPECT_THROW(opt_trim(u4, 0), Error);
}

TEST(OptTrimTest, OptimalAmongOneSidedReductions) {
  Xoshiro256StarStar rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_distribution(rng, 1 + rng.below(12));
    const std::size_t m = 1 + rng.below(x.size());
    const auto r = opt_trim(x, m);
    EXPECT_TRUE(r.one_sided_valid);
    EXPECT_LE(r.approx.size(), m);
    EXPECT_EQ(r.approx.min_value(), x.min_value());
    EXPECT_NEAR(r.one_sided_error, brute_force_one_sided(x, m), 1e-12);
  }
}

TEST(OptTrimTest, NoWorseThanGreedyAtEqualBudget) {
  Xoshiro256StarStar rng(79);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_distribution(rng, 1 + rng.below(80));
    const double eps = 0.01 + 0.5 * rng.uniform();
    const auto greedy = trim_epsilon(x, eps);
    const auto best = opt_trim(x, greedy.approx.size());
    EXPECT_LE(best.one_sided_error, greedy.one_sided_error + 1e-12);
    EXPECT_LE(reduce(x, greedy.approx.size()).distance,
              best.two_sided_error + 1e-12);
  }
}

TEST(SampleReduceTest, PointMassAndDeterminism) {
  const auto c = DiscreteDistribution::point_mass(7);
  const auto r = sample_reduce(c, 100, 3, 5);
  EXPECT_EQ(r.approx, c);
  EXPECT_EQ(r.two_sided_error, 0.0);

  Xoshiro256StarStar rng(83);
  const auto x = random_distribution(rng, 100);
  const auto a = sample_reduce(x, 10000, 10, 7);
  const auto b = sample_reduce(x, 10000, 10, 7);
  EXPECT_EQ(a.approx, b.approx);
  EXPECT_EQ(a.two_sided_error, b.two_sided_error);
  EXPECT_LE(a.approx.size(), 10u);
  EXPECT_THROW(sample_reduce(x, 100, 0, 1), Error);
  EXPECT_THROW(sample_reduce(x, 0, 3, 1), Error);
}

TEST(ApplyReducerTest, DispatchesByMethod) {
  Xoshiro256StarStar rng(89);
  const auto x = random_distribution(rng, 40);
  ReducerConfig config;
  config.m = 5;
  config.method = Method::kKlm;
  EXPECT_EQ(apply_reducer(x, config).approx, reduce(x, 5).approx);
  config.method = Method::kOptTrim;
  EXPECT_EQ(apply_reducer(x, config).approx, opt_trim(x, 5).approx);
  config.method = Method::kTrim;
  EXPECT_EQ(apply_reducer(x, config).approx, trim_with_budget(x, 5).approx);
  config.eps = 0.05;
  EXPECT_EQ(apply_reducer(x, config).approx, trim_epsilon(x, 0.05).approx);
  config.method = Method::kSample;
  config.seed = 3;
  EXPECT_EQ(apply_reducer(x, config).approx, sample_reduce(x, 10000, 5, 3).approx);
}

TEST(MethodNameTest, RoundTrips) {
  for (Method m : {Method::kKlm, Method::kOptTrim, Method::kTrim, Method::kSample}) {
    EXPECT_EQ(parse_method(method_name(m)), m);
  }
  EXPECT_FALSE(parse_method("lp").has_value());
}

}  // namespace
}  // namespace klm
