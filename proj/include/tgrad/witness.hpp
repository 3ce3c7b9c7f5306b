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
#include <string>
#include <string_view>
#include <vector>

#include "tgrad/graph.hpp"

namespace tgrad {

enum class DepthMode { kAtMost, kExactly, kUnbounded };
enum class Occurrence { kSubgraph, kInduced };

inline std::string_view to_string(DepthMode mode) {
  switch (mode) {
    case DepthMode::kAtMost: return "at_most";
    case DepthMode::kExactly: return "exactly";
    case DepthMode::kUnbounded: return "unbounded";
  }
  return "?";
}

inline std::string_view to_string(Occurrence occurrence) {
  return occurrence == Occurrence::kInduced ? "induced" : "subgraph";
}

// Which subdivisions of a pattern count, and how they must sit in the host.
struct SubdivisionSpec {
  DepthMode depth_mode = DepthMode::kAtMost;
  Occurrence occurrence = Occurrence::kSubgraph;
  std::size_t k = 0;  // ignored for kUnbounded

  static SubdivisionSpec at_most(std::size_t k, Occurrence occ = Occurrence::kSubgraph) {
    return {DepthMode::kAtMost, occ, k};
  }
  static SubdivisionSpec exactly(std::size_t k, Occurrence occ = Occurrence::kSubgraph) {
    return {DepthMode::kExactly, occ, k};
  }
  static SubdivisionSpec unbounded(Occurrence occ = Occurrence::kSubgraph) {
    return {DepthMode::kUnbounded, occ, 0};
  }

  bool induced() const { return occurrence == Occurrence::kInduced; }

  // Allowed number of internal vertices per path, given the host order.
  std::size_t min_internal() const { return depth_mode == DepthMode::kExactly ? k : 0; }
  std::size_t max_internal(std::size_t host_order) const {
    return depth_mode == DepthMode::kUnbounded ? host_order : k;
  }

  bool operator==(const SubdivisionSpec& other) const {
    if (depth_mode != other.depth_mode || occurrence != other.occurrence) return false;
    return depth_mode == DepthMode::kUnbounded || k == other.k;
  }
};

// An occurrence of a subdivision of a pattern H inside a host G.
//
// branch_map[h] is the host vertex of pattern vertex h; paths[i] is the host
// path (as a vertex sequence, endpoints included) realizing H.edges()[i],
// oriented from branch_map[e.u] to branch_map[e.v].
struct SubdivisionWitness {
  VertexSet branch_map;
  std::vector<VertexSet> paths;

  bool operator==(const SubdivisionWitness&) const = default;
};

enum class ViolationKind {
  kBranchCountMismatch,
  kPathCountMismatch,
  kVertexOutOfRange,
  kBranchNotInjective,
  kPathTooShort,
  kEndpointMismatch,
  kNotAnEdge,
  kPathNotSimple,
  kInternalHitsBranch,
  kInternalOverlap,
  kDepthViolation,
  kExtraEdge,
};

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kBranchCountMismatch: return "BranchCountMismatch";
    case ViolationKind::kPathCountMismatch: return "PathCountMismatch";
    case ViolationKind::kVertexOutOfRange: return "VertexOutOfRange";
    case ViolationKind::kBranchNotInjective: return "BranchNotInjective";
    case ViolationKind::kPathTooShort: return "PathTooShort";
    case ViolationKind::kEndpointMismatch: return "EndpointMismatch";
    case ViolationKind::kNotAnEdge: return "NotAnEdge";
    case ViolationKind::kPathNotSimple: return "PathNotSimple";
    case ViolationKind::kInternalHitsBranch: return "InternalHitsBranch";
    case ViolationKind::kInternalOverlap: return "InternalOverlap";
    case ViolationKind::kDepthViolation: return "DepthViolation";
    case ViolationKind::kExtraEdge: return "ExtraEdge";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// Checks every clause of the witness definition and reports each failure.
/// An empty result means `w` certifies a subdivision of `h` in `g` under `spec`.
inline std::vector<Violation> verify_witness(const Graph& g, const Graph& h,
                                             const SubdivisionSpec& spec,
                                             const SubdivisionWitness& w) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind kind, std::string detail) {
    out.push_back({kind, std::move(detail)});
  };
  const std::size_t n = g.order();

  if (w.branch_map.size() != h.order()) {
    report(ViolationKind::kBranchCountMismatch,
           "expected " + std::to_string(h.order()) + " branch vertices, got " +
               std::to_string(w.branch_map.size()));
  }
  if (w.paths.size() != h.size()) {
    report(ViolationKind::kPathCountMismatch,
           "expected " + std::to_string(h.size()) + " paths, got " + std::to_string(w.paths.size()));
  }

  // Branch vertices: range and injectivity.
  std::vector<std::int64_t> branch_of(n, -1);
  for (std::size_t i = 0; i < w.branch_map.size(); ++i) {
    Vertex v = w.branch_map[i];
    if (v >= n) {
      report(ViolationKind::kVertexOutOfRange,
             "branch vertex of pattern vertex " + std::to_string(i) + " is " + std::to_string(v));
      continue;
    }
    if (branch_of[v] >= 0) {
      report(ViolationKind::kBranchNotInjective,
             "pattern vertices " + std::to_string(branch_of[v]) + " and " + std::to_string(i) +
                 " share host vertex " + std::to_string(v));
      continue;
    }
    branch_of[v] = static_cast<std::int64_t>(i);
  }

  // owner[v] = index of the path holding v as an internal vertex.
  std::vector<std::int64_t> owner(n, -1);
  const std::size_t lo = spec.min_internal();
  const std::size_t hi = spec.max_internal(n);
  const std::size_t checked = std::min(w.paths.size(), h.size());
  for (std::size_t i = 0; i < w.paths.size(); ++i) {
    const VertexSet& p = w.paths[i];
    const std::string tag = "path " + std::to_string(i);
    bool in_range = std::all_of(p.begin(), p.end(), [&](Vertex v) { return v < n; });
    if (!in_range) {
      report(ViolationKind::kVertexOutOfRange, tag + " leaves the host vertex range");
      continue;
    }
    if (p.size() < 2) {
      report(ViolationKind::kPathTooShort, tag + " has fewer than two vertices");
      continue;
    }
    if (i < checked) {
      const Edge& e = h.edges()[i];
      if (e.u < w.branch_map.size() && e.v < w.branch_map.size() &&
          (p.front() != w.branch_map[e.u] || p.back() != w.branch_map[e.v])) {
        report(ViolationKind::kEndpointMismatch,
               tag + " does not join the images of pattern edge (" + std::to_string(e.u) + "," +
                   std::to_string(e.v) + ")");
      }
    }
    VertexSet sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      report(ViolationKind::kPathNotSimple, tag + " repeats a vertex");
    }
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      if (p[j] == p[j + 1] || !g.adjacent(p[j], p[j + 1])) {
        report(ViolationKind::kNotAnEdge, tag + " uses non-edge (" + std::to_string(p[j]) + "," +
                                              std::to_string(p[j + 1]) + ")");
      }
    }
    const std::size_t internal = p.size() - 2;
    if (internal < lo || internal > hi) {
      report(ViolationKind::kDepthViolation,
             tag + " has " + std::to_string(internal) + " internal vertices");
    }
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      Vertex v = p[j];
      if (branch_of[v] >= 0) {
        report(ViolationKind::kInternalHitsBranch,
               tag + " passes through branch vertex " + std::to_string(v));
      } else if (owner[v] >= 0 && owner[v] != static_cast<std::int64_t>(i)) {
        report(ViolationKind::kInternalOverlap, "paths " + std::to_string(owner[v]) + " and " +
                                                    std::to_string(i) + " share internal vertex " +
                                                    std::to_string(v));
      } else {
        owner[v] = static_cast<std::int64_t>(i);
      }
    }
  }

  if (spec.induced() && out.empty()) {
    // The union of all witness vertices must induce exactly the path edges.
    std::vector<char> used(n, 0);
    std::vector<Edge> allowed;
    for (Vertex v : w.branch_map) used[v] = 1;
    for (const VertexSet& p : w.paths) {
      for (Vertex v : p) used[v] = 1;
      for (std::size_t j = 0; j + 1 < p.size(); ++j) allowed.push_back(make_edge(p[j], p[j + 1]));
    }
    std::sort(allowed.begin(), allowed.end());
    for (const Edge& e : g.edges()) {
      if (used[e.u] && used[e.v] && !std::binary_search(allowed.begin(), allowed.end(), e)) {
        report(ViolationKind::kExtraEdge,
               "host edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                   ") lies inside the occurrence but on no path");
      }
    }
  }
  return out;
}

/// Graph induced by the witness's vertices, useful for debugging.
inline VertexSet witness_vertices(const SubdivisionWitness& w) {
  VertexSet out = w.branch_map;
  for (const VertexSet& p : w.paths) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tgrad
