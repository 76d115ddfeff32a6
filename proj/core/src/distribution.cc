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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "klm/error.h"

namespace klm {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyDistribution: return "EmptyDistribution";
    case ErrorCode::kBadMass: return "BadMass";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kBadSelection: return "BadSelection";
    case ErrorCode::kBadM: return "BadM";
    case ErrorCode::kBadEps: return "BadEps";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kSupportExplosion: return "SupportExplosion";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

namespace {

std::string describe(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double compensated_total(std::span<const double> probs) {
  CompensatedSum sum;
  for (double p : probs) sum.add(p);
  return sum.value();
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> values,
                                           std::vector<double> probs)
    : values_(std::move(values)), probs_(std::move(probs)) {
  if (values_.size() != probs_.size()) {
    throw Error(ErrorCode::kBadMass, "values and probs differ in length");
  }
  if (values_.empty()) {
    throw Error(ErrorCode::kEmptyDistribution, "no support points");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorCode::kNonFiniteValue,
                  "value #" + std::to_string(i) + " is " + describe(values_[i]));
    }
    if (i > 0 && !(values_[i - 1] < values_[i])) {
      throw Error(ErrorCode::kBadSelection,
                  "values not strictly increasing at #" + std::to_string(i));
    }
    if (!(probs_[i] > 0.0) || !std::isfinite(probs_[i])) {
      throw Error(ErrorCode::kBadMass, "probability #" + std::to_string(i) +
                                           " is " + describe(probs_[i]));
    }
  }
  const double total = compensated_total(probs_);
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw Error(ErrorCode::kBadMass,
                "probabilities sum to " + describe(total));
  }
}

DiscreteDistribution DiscreteDistribution::point_mass(double value) {
  return DiscreteDistribution({value}, {1.0});
}

double DiscreteDistribution::total_mass() const {
  return compensated_total(probs_);
}

double DiscreteDistribution::cdf(double t) const {
  const auto end = std::upper_bound(values_.begin(), values_.end(), t);
  const auto count = static_cast<std::size_t>(end - values_.begin());
  return compensated_total(std::span<const double>(probs_).first(count));
}

DiscreteDistribution make_distribution(
    std::span<const std::pair<double, double>> pairs, MassPolicy policy) {
  std::vector<std::pair<double, double>> sorted;
  sorted.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [value, prob] = pairs[i];
    if (!std::isfinite(value)) {
      throw Error(ErrorCode::kNonFiniteValue,
                  "entry #" + std::to_string(i) + " has value " + describe(value));
    }
    if (!(prob >= 0.0) || !std::isfinite(prob)) {
      throw Error(ErrorCode::kBadMass, "entry #" + std::to_string(i) +
                                           " has probability " + describe(prob));
    }
    if (prob > 0.0) sorted.emplace_back(value, prob);
  }
  if (sorted.empty()) {
    throw Error(ErrorCode::kEmptyDistribution, "no positive probability mass");
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<double> values;
  std::vector<double> probs;
  for (std::size_t i = 0; i < sorted.size();) {
    CompensatedSum mass;
    std::size_t j = i;
    for (; j < sorted.size() && sorted[j].first == sorted[i].first; ++j) {
      mass.add(sorted[j].second);
    }
    values.push_back(sorted[i].first);
    probs.push_back(mass.value());
    i = j;
  }

  if (policy == MassPolicy::kRenormalize) {
    const double total = compensated_total(probs);
    for (double& p : probs) p /= total;
  }
  return DiscreteDistribution(std::move(values), std::move(probs));
}

DiscreteDistribution make_distribution(std::span<const double> values,
                                       std::span<const double> probs,
                                       MassPolicy policy) {
  if (values.size() != probs.size()) {
    throw Error(ErrorCode::kParse,
                "values has " + std::to_string(values.size()) +
                    " entries but probs has " + std::to_string(probs.size()));
  }
  std::vector<std::pair<double, double>> pairs(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) pairs[i] = {values[i], probs[i]};
  return make_distribution(pairs, policy);
}

}  // namespace klm
