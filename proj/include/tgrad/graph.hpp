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
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tgrad/errors.hpp"

namespace tgrad {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Immutable undirected simple graph on vertices 0..n-1.
//
// Edges are stored canonically (u < v, sorted); adjacency is kept both as
// sorted neighbor lists and as a bit matrix. Labels are optional metadata and
// do not take part in equality.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0), adj_(n) {}

  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
      require(raw.u < n && raw.v < n, ErrorKind::kInvalidInput,
              "edge (" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                  ") has an endpoint out of range for n=" + std::to_string(n));
      require(raw.u != raw.v, ErrorKind::kInvalidInput,
              "loop at vertex " + std::to_string(raw.u));
      edges_.push_back(make_edge(raw.u, raw.v));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    require(dup == edges_.end(), ErrorKind::kInvalidInput,
            dup == edges_.end() ? std::string()
                                : "duplicate edge (" + std::to_string(dup->u) + "," +
                                      std::to_string(dup->v) + ")");
    for (const Edge& e : edges_) {
      set_bit(e.u, e.v);
      set_bit(e.v, e.u);
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  Graph(std::size_t n, const std::vector<Edge>& edges)
      : Graph(n, std::span<const Edge>(edges.data(), edges.size())) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return n_ == 0; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  // Neighborhood as a 64-bit mask; only meaningful when order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return words_ == 0 ? 0 : bits_[v * words_]; }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adj_) best = std::max(best, list.size());
    return best;
  }

  // Position of the edge {u,v} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const {
    Edge key = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_labels() const noexcept { return !labels_.empty(); }

  Graph with_labels(std::vector<std::string> labels) const {
    require(labels.empty() || labels.size() == n_, ErrorKind::kInvalidInput,
            "label count does not match vertex count");
    Graph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void set_bit(Vertex u, Vertex v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// A pair of disjoint vertex sets (A, B). `left` plays the role of A.
struct BipartiteLayout {
  VertexSet left;
  VertexSet right;
};

// Validates a layout against a graph: in range, disjoint, and (when
// `require_crossing`) every edge of the graph joins left to right.
inline void validate_layout(const Graph& g, const BipartiteLayout& layout, bool require_crossing) {
  std::vector<char> side(g.order(), 0);
  auto mark = [&](const VertexSet& set, char tag) {
    for (Vertex v : set) {
      require(v < g.order(), ErrorKind::kInvalidInput,
              "layout vertex " + std::to_string(v) + " out of range");
      require(side[v] == 0, ErrorKind::kInvalidInput,
              "layout vertex " + std::to_string(v) + " appears twice");
      side[v] = tag;
    }
  };
  mark(layout.left, 1);
  mark(layout.right, 2);
  if (!require_crossing) return;
  for (const Edge& e : g.edges()) {
    require(side[e.u] != 0 && side[e.v] != 0 && side[e.u] != side[e.v], ErrorKind::kInvalidInput,
            "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                ") does not cross the bipartition");
  }
}

inline VertexSet all_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Vertex>(i);
  return out;
}

// Sorted, duplicate-free copy of a vertex set, validated against `n`.
inline VertexSet canonical_set(VertexSet set, std::size_t n) {
  std::sort(set.begin(), set.end());
  require(std::adjacent_find(set.begin(), set.end()) == set.end(), ErrorKind::kInvalidInput,
          "vertex set contains a duplicate");
  for (Vertex v : set) {
    require(v < n, ErrorKind::kInvalidInput, "vertex " + std::to_string(v) + " out of range");
  }
  return set;
}

// Subgraph induced by `subset`. Vertex i of the result is the i-th smallest
// element of `subset`; labels are carried over (or synthesized from the
// original indices when the input has none).
inline Graph induced_subgraph(const Graph& g, const VertexSet& subset) {
  VertexSet s = canonical_set(subset, g.order());
  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      edges.push_back(make_edge(static_cast<Vertex>(index[e.u]), static_cast<Vertex>(index[e.v])));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(s.size());
  for (Vertex v : s) labels.push_back(g.has_labels() ? g.labels()[v] : std::to_string(v));
  return Graph(s.size(), edges).with_labels(std::move(labels));
}

inline std::size_t count_edges_within(const Graph& g, const VertexSet& subset) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : subset) in[v] = 1;
  std::size_t count = 0;
  for (const Edge& e : g.edges()) count += (in[e.u] && in[e.v]) ? 1 : 0;
  return count;
}

inline bool is_independent(const Graph& g, const VertexSet& subset) {
  return count_edges_within(g, subset) == 0;
}

// Named small graphs used throughout the tests and the CLI generators.
inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  require(n >= 3, ErrorKind::kInvalidInput, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(make_edge(v, static_cast<Vertex>((v + 1) % n)));
  return Graph(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

// K_{a,b} with sides 0..a-1 and a..a+b-1.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, static_cast<Vertex>(a + v)});
  return Graph(a + b, edges);
}

inline Graph edgeless_graph(std::size_t n) { return Graph(n); }

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(i + 5, (i + 2) % 5 + 5));
    edges.push_back(make_edge(i, i + 5));
  }
  return Graph(10, edges);
}

}  // namespace tgrad
