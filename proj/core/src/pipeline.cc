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
#include "klm/pipeline.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "klm/combinators.h"
#include "klm/distance.h"
#include "klm/error.h"
#include "klm/io.h"

namespace klm {

namespace {

// Upper bound on the pairs materialized by a single convolution.
constexpr std::size_t kMaxConvolutionTerms = 50'000'000;

void check_cap(const DiscreteDistribution& dist, std::size_t cap) {
  if (dist.size() > cap) {
    throw Error(ErrorCode::kSupportExplosion,
                "intermediate support of " + std::to_string(dist.size()) +
                    " points exceeds the cap of " + std::to_string(cap));
  }
}

DiscreteDistribution combine(TaskTree::Kind kind, const DiscreteDistribution& a,
                             const DiscreteDistribution& b) {
  switch (kind) {
    case TaskTree::Kind::kSeq:
      if (a.size() > kMaxConvolutionTerms / b.size()) {
        throw Error(ErrorCode::kSupportExplosion,
                    "convolution of " + std::to_string(a.size()) + " x " +
                        std::to_string(b.size()) + " points");
      }
      return convolve(a, b);
    case TaskTree::Kind::kMax:
      return max_of(a, b);
    case TaskTree::Kind::kMin:
      return min_of(a, b);
    case TaskTree::Kind::kLeaf:
      break;
  }
  throw Error(ErrorCode::kParse, "leaf has no combinator");
}

std::optional<TaskTree::Kind> kind_from_name(std::string_view name) {
  if (name == "leaf") return TaskTree::Kind::kLeaf;
  if (name == "seq") return TaskTree::Kind::kSeq;
  if (name == "max") return TaskTree::Kind::kMax;
  if (name == "min") return TaskTree::Kind::kMin;
  return std::nullopt;
}

TaskTree parse_node(const nlohmann::json& node, const std::string& where,
                    const std::filesystem::path& base_dir, MassPolicy policy) {
  if (!node.is_object() || !node.contains("kind") || !node["kind"].is_string()) {
    throw Error(ErrorCode::kParse, where + ": node needs a string 'kind'");
  }
  const std::string name = node["kind"].get<std::string>();
  const auto kind = kind_from_name(name);
  if (!kind) throw Error(ErrorCode::kParse, where + ": unknown kind '" + name + "'");

  if (*kind == TaskTree::Kind::kLeaf) {
    if (node.contains("inline")) {
      try {
        return TaskTree::leaf(parse_json(node["inline"].dump(), policy));
      } catch (const Error& e) {
        throw Error(e.code(), where + ".inline: " + e.detail());
      }
    }
    if (node.contains("file") && node["file"].is_string()) {
      const std::filesystem::path file = node["file"].get<std::string>();
      return TaskTree::leaf(
          read_distribution(file.is_absolute() ? file : base_dir / file, policy)
              .dist);
    }
    throw Error(ErrorCode::kParse, where + ": leaf needs 'file' or 'inline'");
  }

  if (!node.contains("children") || !node["children"].is_array() ||
      node["children"].empty()) {
    throw Error(ErrorCode::kParse, where + ": '" + name +
                                       "' needs a nonempty 'children' array");
  }
  std::vector<TaskTree> children;
  const auto& list = node["children"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    children.push_back(parse_node(list[i], where + ".children[" +
                                               std::to_string(i) + "]",
                                  base_dir, policy));
  }
  return TaskTree::node(*kind, std::move(children));
}

template <typename Reduce>
DiscreteDistribution fold(const TaskTree& tree, std::size_t cap,
                          Reduce&& reduce_step) {
  if (tree.kind() == TaskTree::Kind::kLeaf) {
    return reduce_step(tree.distribution());
  }
  const auto& children = tree.children();
  DiscreteDistribution acc = fold(children.front(), cap, reduce_step);
  for (std::size_t i = 1; i < children.size(); ++i) {
    const DiscreteDistribution next = fold(children[i], cap, reduce_step);
    DiscreteDistribution combined = combine(tree.kind(), acc, next);
    check_cap(combined, cap);
    acc = reduce_step(combined);
  }
  return acc;
}

}  // namespace

TaskTree TaskTree::leaf(DiscreteDistribution dist) {
  return TaskTree(Kind::kLeaf, std::move(dist), {});
}

TaskTree TaskTree::node(Kind kind, std::vector<TaskTree> children) {
  if (kind == Kind::kLeaf) {
    throw Error(ErrorCode::kParse, "use TaskTree::leaf for leaves");
  }
  if (children.empty()) {
    throw Error(ErrorCode::kParse, "internal task nodes need children");
  }
  return TaskTree(kind, std::nullopt, std::move(children));
}

const DiscreteDistribution& TaskTree::distribution() const {
  if (!leaf_) throw Error(ErrorCode::kParse, "not a leaf");
  return *leaf_;
}

std::size_t TaskTree::leaf_count() const {
  if (kind_ == Kind::kLeaf) return 1;
  std::size_t count = 0;
  for (const auto& child : children_) count += child.leaf_count();
  return count;
}

TaskTree parse_task_tree(std::string_view json_text,
                         const std::filesystem::path& base_dir,
                         MassPolicy policy) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  return parse_node(doc, "tree", base_dir, policy);
}

TaskTree load_task_tree(const std::filesystem::path& path, MassPolicy policy) {
  try {
    return parse_task_tree(read_text_file(path), path.parent_path(), policy);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

DiscreteDistribution eval_exact(const TaskTree& tree, std::size_t cap) {
  return fold(tree, cap, [cap](const DiscreteDistribution& d) {
    check_cap(d, cap);
    return d;
  });
}

DiscreteDistribution eval_reduced(const TaskTree& tree,
                                  const ReducerConfig& config, std::size_t cap,
                                  const ReductionHook& hook) {
  if (config.m == 0) throw Error(ErrorCode::kBadM, "m must be >= 1");
  std::uint64_t step = 0;
  return fold(tree, cap, [&](const DiscreteDistribution& d) {
    if (d.size() <= config.m) return d;
    BaselineResult result = apply_reducer(d, config, step++);
    if (hook) hook(d, result);
    return std::move(result.approx);
  });
}

PipelineReport compare_pipeline(const TaskTree& tree,
                                const ReducerConfig& config,
                                std::span<const double> deadlines,
                                std::size_t cap) {
  const DiscreteDistribution exact = eval_exact(tree, cap);
  const DiscreteDistribution approx = eval_reduced(tree, config, cap);
  PipelineReport report;
  report.exact_support_size = exact.size();
  report.approx_support_size = approx.size();
  report.d_k = kolmogorov_distance(exact, approx);
  for (double t : deadlines) {
    DeadlineRow row;
    row.deadline = t;
    row.exact_cdf = exact.cdf(t);
    row.approx_cdf = approx.cdf(t);
    row.abs_diff = std::abs(row.exact_cdf - row.approx_cdf);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace klm
