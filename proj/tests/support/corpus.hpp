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

// Exhaustive corpora of small graphs up to isomorphism. Graphs on n+1
// vertices are produced by attaching a new vertex to every neighbor subset of
// each graph on n vertices, then deduplicated by a canonical form.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "tgrad/graph.hpp"

namespace tgrad::testing {

// Adjacency bits of the upper triangle under `perm` (perm[i] = vertex placed
// at position i), row by row.
inline std::uint64_t code_under(const Graph& g, const std::vector<Vertex>& perm) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) code = code << 1 | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
  return code;
}

// Colour refinement followed by brute force over orderings inside cells.
inline std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> color(n, 0);
  for (;;) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<decltype(sig)::value_type> distinct(sig.begin(), sig.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v)
      next[v] = std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin();
    const bool stable = std::set<std::size_t>(next.begin(), next.end()).size() ==
                        std::set<std::size_t>(color.begin(), color.end()).size();
    color = std::move(next);
    if (stable) break;
  }
  std::map<std::size_t, std::vector<Vertex>> cells;
  for (Vertex v = 0; v < n; ++v) cells[color[v]].push_back(v);
  std::vector<std::vector<Vertex>> parts;
  for (auto& [c, vs] : cells) parts.push_back(vs);
  std::uint64_t best = UINT64_MAX;
  std::vector<Vertex> perm;
  auto rec = [&](auto&& self, std::size_t part) -> void {
    if (part == parts.size()) {
      best = std::min(best, code_under(g, perm));
      return;
    }
    std::vector<Vertex> cell = parts[part];
    std::sort(cell.begin(), cell.end());
    do {
      perm.insert(perm.end(), cell.begin(), cell.end());
      self(self, part + 1);
      perm.resize(perm.size() - cell.size());
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  rec(rec, 0);
  return best;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.order();
}

// by_order[n] = all graphs on n vertices up to isomorphism, n = 0..max_n.
inline std::vector<std::vector<Graph>> all_graphs_by_order(std::size_t max_n) {
  std::vector<std::vector<Graph>> by_order(max_n + 1);
  by_order[0].push_back(Graph(0));
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::set<std::uint64_t> seen;
    for (const Graph& base : by_order[n - 1]) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::vector<Edge> edges = base.edges();
        for (Vertex v = 0; v + 1 < n; ++v)
          if (mask >> v & 1U) edges.push_back({v, static_cast<Vertex>(n - 1)});
        Graph g(n, edges);
        if (seen.insert(canonical_code(g)).second) by_order[n].push_back(std::move(g));
      }
    }
  }
  return by_order;
}

// Connected graphs on 1..max_n vertices, up to isomorphism.
inline std::vector<Graph> connected_graphs(std::size_t max_n) {
  std::vector<Graph> out;
  auto by_order = all_graphs_by_order(max_n);
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& g : by_order[n])
      if (is_connected(g)) out.push_back(g);
  return out;
}

// All graphs on 1..max_n vertices, up to isomorphism.
inline std::vector<Graph> all_graphs(std::size_t max_n) {
  std::vector<Graph> out;
  auto by_order = all_graphs_by_order(max_n);
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& g : by_order[n]) out.push_back(g);
  return out;
}

}  // namespace tgrad::testing
