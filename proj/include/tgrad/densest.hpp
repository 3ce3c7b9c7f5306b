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

#include <cstdint>
#include <vector>

#include "tgrad/graph.hpp"
#include "tgrad/max_flow.hpp"
#include "tgrad/numeric.hpp"

namespace tgrad {

/// 2|E|/|V| as an exact rational.
inline Rational average_degree(const Graph& g) {
  require(g.order() >= 1, ErrorKind::kDegenerateInput, "average degree of the empty graph");
  return Rational(BigInt(2 * g.size()), BigInt(g.order()));
}

/// Average degree of an arbitrary (vertex count, edge count) pair.
inline Rational average_degree(std::size_t vertices, std::size_t edges) {
  require(vertices >= 1, ErrorKind::kDegenerateInput, "average degree with no vertices");
  return Rational(BigInt(2 * edges), BigInt(vertices));
}

struct MaxAverageDegree {
  Rational value;
  VertexSet witness;  // a vertex set whose induced subgraph attains `value`
};

namespace detail {

// True iff some nonempty S has |E(S)|/|S| > threshold/scale; fills `best`
// with the minimal maximizer of scale*|E(S)| - threshold*|S|.
inline bool denser_than(const Graph& g, std::int64_t threshold, std::int64_t scale,
                        VertexSet* best) {
  const std::size_t n = g.order();
  const auto m = static_cast<std::int64_t>(g.size());
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  FlowNetwork net(n + 2);
  for (Vertex v = 0; v < n; ++v) {
    net.add_edge(source, v, m * scale);
    net.add_edge(v, sink, m * scale + 2 * threshold - scale * static_cast<std::int64_t>(g.degree(v)));
  }
  for (const Edge& e : g.edges()) net.add_edge(e.u, e.v, scale, scale);
  const std::int64_t cut = net.max_flow(source, sink);
  if (cut >= static_cast<std::int64_t>(n) * m * scale) return false;
  if (best != nullptr) {
    auto side = net.source_side(source);
    best->clear();
    for (Vertex v = 0; v < n; ++v)
      if (side[v]) best->push_back(v);
  }
  return true;
}

}  // namespace detail

/// Maximum average degree over all nonempty subgraphs (equivalently induced
/// subgraphs), with a maximizing vertex set.
///
/// Binary search over thresholds t/Q with Q = n(n-1) and a min-cut oracle.
/// Two distinct subgraph densities differ by at least 1/Q, so the largest
/// feasible t pins the optimum down to a half-open window of width 1/Q and the
/// cut's source side at that t is an exact maximizer.
inline MaxAverageDegree max_average_degree(const Graph& g) {
  const std::size_t n = g.order();
  require(n >= 1, ErrorKind::kDegenerateInput, "maximum average degree of the empty graph");
  if (g.size() == 0 || n == 1) return {Rational(0), all_vertices(g)};
  require(n <= 4096, ErrorKind::kInvalidInput, "graph too large for the exact flow oracle");

  const auto scale = static_cast<std::int64_t>(n * (n - 1));
  const auto m = static_cast<std::int64_t>(g.size());
  std::int64_t lo = 0;              // feasible
  std::int64_t hi = m * scale + 1;  // infeasible: density never exceeds m
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (detail::denser_than(g, mid, scale, nullptr)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  VertexSet best;
  detail::denser_than(g, lo, scale, &best);
  const std::size_t inside = count_edges_within(g, best);
  return {average_degree(best.size(), inside), best};
}

}  // namespace tgrad
