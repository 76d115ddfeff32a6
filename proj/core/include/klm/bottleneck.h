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
#ifndef KLM_BOTTLENECK_H_
#define KLM_BOTTLENECK_H_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace klm {

struct BottleneckPath {
  // Interior vertices of the chosen source-to-sink path, increasing.
  std::vector<std::size_t> interior;
  // Largest edge weight on the path.
  double bottleneck = 0.0;
};

// Minimum-bottleneck path through the complete DAG
//
//   source -> {0, ..., n-1} -> sink,  edges i -> j for every i < j,
//
// using at least one and at most `max_interior` interior vertices (so at most
// max_interior + 1 edges). The direct source -> sink edge is not part of the
// graph. Edge weights are supplied on demand:
//
//   entry(j)     weight of source -> j
//   inner(i, j)  weight of i -> j, i < j
//   exit(i)      weight of i -> sink
//
// Layer k of the dynamic program holds, for every vertex j, the smallest
// bottleneck of a source -> j path with at most k interior vertices:
//
//   B_1[j] = entry(j)
//   B_k[j] = min(B_{k-1}[j], min_{i<j} max(B_{k-1}[i], inner(i, j)))
//
// and the optimum is min_j max(B_max[j], exit(j)). Two rolling layers are
// kept, so memory is O(n); time is O(n^2 * max_interior).
//
// Among all optimal paths the one whose interior sequence is
// lexicographically smallest (a proper prefix sorts first) is returned. It is
// rebuilt from the optimum alone: a backward pass computes, for each vertex,
// the fewest edges to the sink using only edges no heavier than the optimum,
// then a forward pass takes the smallest feasible next vertex and stops as
// soon as the sink is reachable directly.
//
// Requires n >= 1 and max_interior >= 1. Comparisons are exact; all weights
// must come from the same functors for the reconstruction to be consistent.
template <typename Entry, typename Inner, typename Exit>
BottleneckPath min_bottleneck_path(std::size_t n, std::size_t max_interior,
                                   Entry&& entry, Inner&& inner, Exit&& exit) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

  std::vector<double> layer(n);
  std::vector<double> next(n);
  for (std::size_t j = 0; j < n; ++j) layer[j] = entry(j);
  for (std::size_t k = 2; k <= max_interior; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      double best = layer[j];
      for (std::size_t i = 0; i < j; ++i) {
        const double w = inner(i, j);
        const double candidate = layer[i] > w ? layer[i] : w;
        best = candidate < best ? candidate : best;
      }
      next[j] = best;
    }
    std::swap(layer, next);
  }

  double optimum = kInf;
  for (std::size_t j = 0; j < n; ++j) {
    optimum = std::min(optimum, std::max(layer[j], exit(j)));
  }

  // hops[j]: fewest edges from j to the sink with every edge <= optimum.
  std::vector<std::size_t> hops(n, kUnreachable);
  for (std::size_t j = n; j-- > 0;) {
    if (exit(j) <= optimum) {
      hops[j] = 1;
      continue;
    }
    std::size_t best = kUnreachable;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (hops[k] < best && inner(j, k) <= optimum) best = hops[k];
    }
    if (best != kUnreachable) hops[j] = best + 1;
  }

  BottleneckPath path;
  path.bottleneck = optimum;
  std::size_t current = n;  // n stands for the source
  for (;;) {
    const std::size_t used = path.interior.size();
    std::size_t chosen = kUnreachable;
    for (std::size_t j = current == n ? 0 : current + 1; j < n; ++j) {
      if (hops[j] > max_interior - used) continue;
      const double w = current == n ? entry(j) : inner(current, j);
      if (w <= optimum) {
        chosen = j;
        break;
      }
    }
    // The optimum is attained, so a feasible continuation always exists.
    if (chosen == kUnreachable) break;
    path.interior.push_back(chosen);
    if (exit(chosen) <= optimum) break;
    current = chosen;
  }
  return path;
}

}  // namespace klm

#endif  // KLM_BOTTLENECK_H_
