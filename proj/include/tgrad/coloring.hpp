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
#include <vector>

#include "tgrad/graph.hpp"

namespace tgrad {

using Coloring = std::vector<std::size_t>;

struct DegeneracyOrder {
  VertexSet order;         // removal order: each vertex has <= degeneracy later neighbors
  std::size_t degeneracy = 0;
};

/// Smallest-last ordering via bucket queue.
inline DegeneracyOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  DegeneracyOrder out;
  if (n == 0) return out;
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::vector<Vertex>> buckets(max_deg + 1);
  for (Vertex v = n; v-- > 0;) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::size_t cursor = 0;
  while (out.order.size() < n) {
    cursor = cursor > 0 ? cursor - 1 : 0;
    while (buckets[cursor].empty()) ++cursor;
    Vertex v = buckets[cursor].back();
    buckets[cursor].pop_back();
    if (removed[v] || deg[v] != cursor) continue;  // stale entry
    removed[v] = 1;
    out.order.push_back(v);
    out.degeneracy = std::max(out.degeneracy, cursor);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      --deg[w];
      buckets[deg[w]].push_back(w);
    }
  }
  return out;
}

/// Greedy coloring along the reverse degeneracy order; uses at most
/// degeneracy + 1 colors.
inline Coloring greedy_coloring(const Graph& g) {
  const std::size_t n = g.order();
  Coloring color(n, 0);
  if (n == 0) return color;
  DegeneracyOrder order = degeneracy_order(g);
  std::vector<char> colored(n, 0);
  std::vector<char> taken;
  for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
    Vertex v = *it;
    taken.assign(g.degree(v) + 1, 0);
    for (Vertex w : g.neighbors(v)) {
      if (colored[w] && color[w] < taken.size()) taken[color[w]] = 1;
    }
    std::size_t c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    colored[v] = 1;
  }
  return color;
}

inline std::size_t color_count(const Coloring& coloring) {
  std::size_t count = 0;
  for (std::size_t c : coloring) count = std::max(count, c + 1);
  return count;
}

inline bool is_proper_coloring(const Graph& g, const Coloring& coloring) {
  if (coloring.size() != g.order()) return false;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return coloring[e.u] == coloring[e.v]; });
}

/// Largest color class of greedy_coloring (lowest color index on ties).
inline VertexSet independent_set_from_coloring(const Graph& g) {
  if (g.order() == 0) return {};
  Coloring coloring = greedy_coloring(g);
  std::vector<std::size_t> sizes(color_count(coloring), 0);
  for (std::size_t c : coloring) ++sizes[c];
  std::size_t best = static_cast<std::size_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (coloring[v] == best) out.push_back(v);
  return out;
}

namespace detail {

inline bool extend_coloring(const Graph& g, const VertexSet& order, std::size_t index,
                            std::size_t colors, Coloring& color, std::size_t used) {
  if (index == order.size()) return true;
  Vertex v = order[index];
  // Symmetry break: a fresh color is only ever the next unused one.
  const std::size_t limit = std::min(colors, used + 1);
  for (std::size_t c = 0; c < limit; ++c) {
    bool clash = false;
    for (Vertex w : g.neighbors(v)) {
      if (color[w] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[v] = c;
    if (extend_coloring(g, order, index + 1, colors, color, std::max(used, c + 1))) return true;
  }
  color[v] = static_cast<std::size_t>(-1);
  return false;
}

}  // namespace detail

/// Exact test chi(G) <= colors by backtracking (desk scale).
inline bool colorable_with(const Graph& g, std::size_t colors) {
  if (g.order() == 0) return true;
  if (colors == 0) return false;
  if (colors >= g.order()) return true;
  if (color_count(greedy_coloring(g)) <= colors) return true;
  VertexSet order = all_vertices(g);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  Coloring color(g.order(), static_cast<std::size_t>(-1));
  return detail::extend_coloring(g, order, 0, colors, color, 0);
}

}  // namespace tgrad
