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
#ifndef KLM_PIPELINE_H_
#define KLM_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <utility>
#include <span>
#include <string_view>
#include <vector>

#include "klm/baselines.h"
#include "klm/distribution.h"

namespace klm {

inline constexpr std::size_t kDefaultSupportCap = 1'000'000;

// Expression tree over independent task durations. seq sums its children,
// max and min take the maximum / minimum. Children fold left to right.
class TaskTree {
 public:
  enum class Kind { kLeaf, kSeq, kMax, kMin };

  static TaskTree leaf(DiscreteDistribution dist);
  // Throws kParse when children is empty.
  static TaskTree node(Kind kind, std::vector<TaskTree> children);

  Kind kind() const { return kind_; }
  const DiscreteDistribution& distribution() const;  // leaves only
  const std::vector<TaskTree>& children() const { return children_; }

  std::size_t leaf_count() const;

 private:
  TaskTree(Kind kind, std::optional<DiscreteDistribution> dist,
           std::vector<TaskTree> children)
      : kind_(kind), leaf_(std::move(dist)), children_(std::move(children)) {}

  Kind kind_;
  std::optional<DiscreteDistribution> leaf_;
  std::vector<TaskTree> children_;
};

// Tree files are JSON:
//   {"kind": "seq" | "max" | "min", "children": [...]}
//   {"kind": "leaf", "file": "path.csv"}        relative to base_dir
//   {"kind": "leaf", "inline": {"values": [...], "probs": [...]}}
TaskTree parse_task_tree(std::string_view json_text,
                         const std::filesystem::path& base_dir,
                         MassPolicy policy = MassPolicy::kStrict);
TaskTree load_task_tree(const std::filesystem::path& path,
                        MassPolicy policy = MassPolicy::kStrict);

// Exact evaluation. Throws kSupportExplosion as soon as an intermediate
// support exceeds `cap`.
DiscreteDistribution eval_exact(const TaskTree& tree,
                                std::size_t cap = kDefaultSupportCap);

// Observes each reduction step inside eval_reduced: the distribution before
// the step and the reducer's result.
using ReductionHook =
    std::function<void(const DiscreteDistribution& before,
                       const BaselineResult& after)>;

// The same fold as eval_exact, but leaves with support > m are reduced on
// entry and every combine whose output support exceeds m is followed by the
// configured reducer. Sampling steps use successive streams of config.seed.
DiscreteDistribution eval_reduced(const TaskTree& tree,
                                  const ReducerConfig& config,
                                  std::size_t cap = kDefaultSupportCap,
                                  const ReductionHook& hook = {});

struct DeadlineRow {
  double deadline = 0.0;
  double exact_cdf = 0.0;
  double approx_cdf = 0.0;
  double abs_diff = 0.0;
};

struct PipelineReport {
  std::size_t exact_support_size = 0;
  std::size_t approx_support_size = 0;
  double d_k = 0.0;
  std::vector<DeadlineRow> rows;
};

// Exact versus reduced evaluation, compared at each deadline and overall.
PipelineReport compare_pipeline(const TaskTree& tree,
                                const ReducerConfig& config,
                                std::span<const double> deadlines,
                                std::size_t cap = kDefaultSupportCap);

}  // namespace klm

#endif  // KLM_PIPELINE_H_
