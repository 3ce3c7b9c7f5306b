// Copyright 2026 The tgrad Authors
//
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace tgrad {

// Dinic's max-flow on a small dense-ish network with 64-bit capacities.
class FlowNetwork {
 public:
  using Capacity = std::int64_t;

  explicit FlowNetwork(std::size_t nodes) : graph_(nodes), level_(nodes), cursor_(nodes) {}

  void add_edge(std::size_t from, std::size_t to, Capacity forward, Capacity backward = 0) {
    graph_[from].push_back({to, graph_[to].size(), forward});
    graph_[to].push_back({from, graph_[from].size() - 1, backward});
  }

  Capacity max_flow(std::size_t source, std::size_t sink) {
    Capacity total = 0;
    while (bfs(source, sink)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (Capacity pushed = dfs(source, sink, std::numeric_limits<Capacity>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  // After max_flow: nodes reachable from `source` in the residual network.
  std::vector<char> source_side(std::size_t source) const {
    std::vector<char> seen(graph_.size(), 0);
    std::vector<std::size_t> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const Arc& a : graph_[v]) {
        if (a.residual > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    std::size_t reverse;
    Capacity residual;
  };

  bool bfs(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      for (const Arc& a : graph_[v]) {
        if (a.residual > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          queue.push(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Capacity dfs(std::size_t v, std::size_t sink, Capacity limit) {
    if (v == sink) return limit;
    for (std::size_t& i = cursor_[v]; i < graph_[v].size(); ++i) {
      Arc& a = graph_[v][i];
      if (a.residual <= 0 || level_[a.to] != level_[v] + 1) continue;
      if (Capacity pushed = dfs(a.to, sink, std::min(limit, a.residual))) {
        a.residual -= pushed;
        graph_[a.to][a.reverse].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace tgrad
