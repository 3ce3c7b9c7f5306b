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
#include <random>
#include <utility>
#include <vector>

#include "tgrad/cliques.hpp"
#include "tgrad/config.hpp"
#include "tgrad/errors.hpp"
#include "tgrad/graph.hpp"
#include "tgrad/witness.hpp"

namespace tgrad {

/// Seeded generator with a portable stream: the raw 64-bit outputs of
/// std::mt19937_64 are fixed by the standard, and the conversions below avoid
/// the implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct GeneratedSubdivision {
  Graph graph;
  Graph pattern;
  SubdivisionWitness witness;
};

/// Subdivides the i-th edge of h (in h.edges() order) by lengths[i] new
/// vertices. New vertices are numbered from |V(h)| on, edge by edge.
inline GeneratedSubdivision subdivide(const Graph& h, const std::vector<std::size_t>& lengths) {
  require(lengths.size() == h.size(), ErrorKind::kInvalidSpec,
          "need one subdivision length per pattern edge");
  GeneratedSubdivision out;
  out.pattern = h;
  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(h.order());
  for (Vertex v = 0; v < h.order(); ++v) out.witness.branch_map.push_back(v);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Edge e = h.edges()[i];
    VertexSet path{e.u};
    for (std::size_t j = 0; j < lengths[i]; ++j) path.push_back(next++);
    path.push_back(e.v);
    for (std::size_t j = 0; j + 1 < path.size(); ++j) edges.push_back(make_edge(path[j], path[j + 1]));
    out.witness.paths.push_back(std::move(path));
  }
  out.graph = Graph(next, edges);
  return out;
}

inline Graph uniform_subdivision(const Graph& h, std::size_t k) {
  return subdivide(h, std::vector<std::size_t>(h.size(), k)).graph;
}

inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, ErrorKind::kInvalidSpec, "p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, v});
  return Graph(n, edges);
}

/// Left side 0..a-1, right side a..a+b-1.
inline Graph random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, ErrorKind::kInvalidSpec, "p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, static_cast<Vertex>(a + v)});
  return Graph(a + b, edges);
}

/// A (<=k)-subdivision of h with per-edge lengths drawn uniformly from 0..k
/// (all equal to k with `exact_depth`), plus each absent pair joined with
/// probability `noise`, under a random relabeling. The witness certifies the
/// planted copy as a subgraph.
inline GeneratedSubdivision planted(const Graph& h, std::size_t k, double noise, std::uint64_t seed,
                                    bool exact_depth = false) {
  require(noise >= 0.0 && noise <= 1.0, ErrorKind::kInvalidSpec, "noise must lie in [0, 1]");
  Rng rng(seed);
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < h.size(); ++i)
    lengths.push_back(exact_depth ? k : static_cast<std::size_t>(rng.below(k + 1)));
  GeneratedSubdivision base = subdivide(h, lengths);
  const std::size_t n = base.graph.order();
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  rng.shuffle(perm);
  std::vector<Edge> edges;
  for (const Edge& e : base.graph.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!base.graph.adjacent(u, v) && rng.bernoulli(noise)) edges.push_back(make_edge(perm[u], perm[v]));
  GeneratedSubdivision out;
  out.graph = Graph(n, edges);
  out.pattern = h;
  for (Vertex b : base.witness.branch_map) out.witness.branch_map.push_back(perm[b]);
  for (const auto& p : base.witness.paths) {
    VertexSet q;
    for (Vertex v : p) q.push_back(perm[v]);
    out.witness.paths.push_back(std::move(q));
  }
  return out;
}

struct FilteredFamily {
  std::vector<Graph> members;
  std::size_t attempts = 0;
  bool complete = false;  // false: some member hit the attempt cap
};

/// Rejection sampling of G(n, p) graphs with no induced K_s, no induced
/// K_{s,s}, and no induced subdivision of h. Each attempt draws p uniformly
/// from [0.05, 0.6]; each member gets at most `max_attempts` tries.
inline FilteredFamily filtered_family(const Graph& h, std::size_t s, std::size_t n, std::size_t count,
                                      std::uint64_t seed, std::size_t max_attempts = 100'000,
                                      const SearchLimits& limits = {}) {
  require(s >= 1, ErrorKind::kInvalidSpec, "s must be positive");
  require(max_attempts >= 1, ErrorKind::kInvalidSpec, "attempt cap must be positive");
  Rng rng(seed);
  FilteredFamily out;
  for (std::size_t m = 0; m < count; ++m) {
    bool found = false;
    for (std::size_t t = 0; t < max_attempts && !found; ++t) {
      ++out.attempts;
      const double p = 0.05 + 0.55 * rng.uniform();
      Graph g = random_gnp(n, p, rng.next());
      if (forbidden_pattern_check(g, h, s, limits).in_class()) {
        out.members.push_back(std::move(g));
        found = true;
      }
    }
    if (!found) return out;
  }
  out.complete = true;
  return out;
}

}  // namespace tgrad
