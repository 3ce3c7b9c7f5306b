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
#include <optional>
#include <vector>

#include "tgrad/config.hpp"
#include "tgrad/graph.hpp"
#include "tgrad/witness.hpp"

namespace tgrad {

namespace detail {

// Complete backtracking search for a subdivision of a pattern.
//
// Pattern vertices are placed one at a time (most constrained first); as soon
// as a vertex is placed, every pattern edge back to an already placed vertex
// is routed as a host path by depth-first search. Candidates are always tried
// in increasing vertex order, so the first witness found is deterministic.
class SubdivisionFinder {
 public:
  SubdivisionFinder(const Graph& host, const Graph& pattern, const SubdivisionSpec& spec,
                    std::uint64_t budget)
      : g_(host),
        h_(pattern),
        induced_(spec.induced()),
        lo_(spec.min_internal()),
        hi_(std::min(spec.max_internal(host.order()), host.order())),
        budget_(budget),
        image_(pattern.order(), kUnmapped),
        used_(host.order(), 0),
        paths_(pattern.size()) {
    build_order();
  }

  std::optional<SubdivisionWitness> run() {
    if (h_.order() > g_.order()) return std::nullopt;
    if (!place(0)) return std::nullopt;
    SubdivisionWitness out;
    out.branch_map.resize(h_.order());
    for (Vertex w = 0; w < h_.order(); ++w) out.branch_map[w] = image_[w];
    out.paths = paths_;
    for (std::size_t i = 0; i < h_.size(); ++i) {
      if (out.paths[i].front() != out.branch_map[h_.edges()[i].u]) {
        std::reverse(out.paths[i].begin(), out.paths[i].end());
      }
    }
    return out;
  }

 private:
  static constexpr Vertex kUnmapped = static_cast<Vertex>(-1);

  struct BackEdge {
    std::size_t edge;  // index into h_.edges()
    Vertex earlier;    // pattern vertex placed before
  };

  void build_order() {
    const std::size_t k = h_.order();
    std::vector<char> placed(k, 0);
    std::vector<std::size_t> links(k, 0);
    order_.reserve(k);
    for (std::size_t step = 0; step < k; ++step) {
      Vertex pick = kUnmapped;
      for (Vertex w = 0; w < k; ++w) {
        if (placed[w]) continue;
        if (pick == kUnmapped || links[w] > links[pick] ||
            (links[w] == links[pick] && h_.degree(w) > h_.degree(pick))) {
          pick = w;
        }
      }
      placed[pick] = 1;
      order_.push_back(pick);
      for (Vertex x : h_.neighbors(pick)) ++links[x];
    }
    std::vector<std::size_t> position(k, 0);
    for (std::size_t i = 0; i < k; ++i) position[order_[i]] = i;
    back_.assign(k, {});
    for (std::size_t i = 0; i < h_.size(); ++i) {
      const Edge& e = h_.edges()[i];
      Vertex later = position[e.u] > position[e.v] ? e.u : e.v;
      Vertex earlier = later == e.u ? e.v : e.u;
      back_[position[later]].push_back({i, earlier});
    }
    for (auto& list : back_) {
      std::sort(list.begin(), list.end(), [&](const BackEdge& a, const BackEdge& b) {
        return position[a.earlier] < position[b.earlier];
      });
    }
  }

  void tick() {
    if (++nodes_ > budget_) {
      fail(ErrorKind::kBudgetExceeded,
           "subdivision search exceeded its budget of " + std::to_string(budget_) + " nodes");
    }
  }

  std::size_t free_neighbors(Vertex x) const {
    std::size_t count = 0;
    for (Vertex y : g_.neighbors(x)) count += used_[y] ? 0 : 1;
    return count;
  }

  bool is_back_image(std::size_t pos, Vertex y) const {
    for (const BackEdge& b : back_[pos])
      if (image_[b.earlier] == y) return true;
    return false;
  }

  bool can_map(std::size_t pos, Vertex w, Vertex x) const {
    if (used_[x] || g_.degree(x) < h_.degree(w)) return false;
    std::size_t adjacent_back = 0;
    for (const BackEdge& b : back_[pos]) {
      bool adj = g_.adjacent(image_[b.earlier], x);
      if (adj) ++adjacent_back;
      if (hi_ == 0 && !adj) return false;
      if (induced_ && adj && lo_ > 0) return false;
    }
    if (induced_) {
      for (Vertex y : g_.neighbors(x)) {
        if (used_[y] && !is_back_image(pos, y)) return false;
      }
    }
    return free_neighbors(x) + adjacent_back >= h_.degree(w);
  }

  // Every unrouted pattern edge at a placed vertex needs its own free host
  // neighbor there, unless both ends are placed on adjacent host vertices and
  // a direct edge is allowed.
  bool capacity_ok() const {
    std::vector<std::size_t> need(h_.order(), 0);
    const auto& edges = h_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!paths_[i].empty()) continue;
      const Vertex iu = image_[edges[i].u], iv = image_[edges[i].v];
      if (iu != kUnmapped && iv != kUnmapped && lo_ == 0 && g_.adjacent(iu, iv)) continue;
      if (iu != kUnmapped) ++need[edges[i].u];
      if (iv != kUnmapped) ++need[edges[i].v];
    }
    for (Vertex w = 0; w < h_.order(); ++w) {
      if (need[w] > 0 && free_neighbors(image_[w]) < need[w]) return false;
    }
    return true;
  }

  bool place(std::size_t pos) {
    if (pos == order_.size()) return true;
    Vertex w = order_[pos];
    for (Vertex x = 0; x < g_.order(); ++x) {
      tick();
      if (!can_map(pos, w, x)) continue;
      image_[w] = x;
      used_[x] = 1;
      if (route(pos, 0)) return true;
      used_[x] = 0;
      image_[w] = kUnmapped;
    }
    return false;
  }

  bool route(std::size_t pos, std::size_t index) {
    if (index == back_[pos].size()) return place(pos + 1);
    const BackEdge& b = back_[pos][index];
    Vertex w = order_[pos];
    Vertex from = image_[b.earlier];
    Vertex to = image_[w];
    current_.assign(1, from);
    return extend(pos, index, b, w, to);
  }

  bool close_path(std::size_t pos, std::size_t index, const BackEdge& b, Vertex to) {
    VertexSet path = current_;
    path.push_back(to);
    paths_[b.edge] = std::move(path);
    VertexSet saved = current_;
    bool ok = capacity_ok() && route(pos, index + 1);
    if (!ok) {
      paths_[b.edge].clear();
      current_ = std::move(saved);
    }
    return ok;
  }

  bool extend(std::size_t pos, std::size_t index, const BackEdge& b, Vertex w, Vertex to) {
    tick();
    Vertex cur = current_.back();
    const std::size_t internal = current_.size() - 1;
    if (g_.adjacent(cur, to)) {
      if (internal >= lo_) {
        if (close_path(pos, index, b, to)) return true;
        // Extending past a vertex adjacent to the target is never needed
        // unless more internal vertices are required; in induced mode it
        // would create a chord.
        return false;
      }
      if (induced_) return false;
    }
    if (internal >= hi_) return false;
    for (Vertex y : g_.neighbors(cur)) {
      if (used_[y]) continue;
      if (induced_ && !induced_step_ok(y, cur, to, internal + 1)) continue;
      used_[y] = 1;
      current_.push_back(y);
      bool ok = extend(pos, index, b, w, to);
      if (ok) return true;
      current_.pop_back();
      used_[y] = 0;
    }
    return false;
  }

  // A new internal vertex may only touch its predecessor and (if it will be
  // the last internal vertex) the target among already used vertices.
  bool induced_step_ok(Vertex y, Vertex prev, Vertex to, std::size_t internal_after) const {
    for (Vertex z : g_.neighbors(y)) {
      if (!used_[z] || z == prev) continue;
      if (z == to && internal_after >= lo_) continue;
      return false;
    }
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  bool induced_;
  std::size_t lo_;
  std::size_t hi_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::vector<BackEdge>> back_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::vector<VertexSet> paths_;
  VertexSet current_;
};

}  // namespace detail

/// Searches `g` for a subdivision of `h` under `spec`.
///
/// Returns a witness (which always passes verify_witness) or nullopt once the
/// search space is exhausted. Throws Error(kBudgetExceeded) if the node budget
/// runs out first, which is distinct from "none".
inline std::optional<SubdivisionWitness> find_subdivision(const Graph& g, const Graph& h,
                                                          const SubdivisionSpec& spec,
                                                          const SearchLimits& limits = {}) {
  detail::SubdivisionFinder finder(g, h, spec, limits.node_budget);
  return finder.run();
}

/// Topological K_n: a subdivision of K_n with paths of any length.
inline std::optional<SubdivisionWitness> find_clique_subdivision(const Graph& g, std::size_t n,
                                                                 const SearchLimits& limits = {}) {
  require(n >= 1, ErrorKind::kInvalidInput, "clique order must be positive");
  return find_subdivision(g, complete_graph(n), SubdivisionSpec::unbounded(), limits);
}

}  // namespace tgrad
