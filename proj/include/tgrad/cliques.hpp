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
#include <map>
#include <optional>
#include <vector>

#include "tgrad/config.hpp"
#include "tgrad/graph.hpp"
#include "tgrad/subdivision_search.hpp"

namespace tgrad {

struct Biclique {
  VertexSet left;
  VertexSet right;
};

namespace detail {

class BudgetCounter {
 public:
  explicit BudgetCounter(std::uint64_t budget) : budget_(budget) {}
  void tick(const char* what) {
    if (++nodes_ > budget_) {
      fail(ErrorKind::kBudgetExceeded, std::string(what) + " exceeded its node budget");
    }
  }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

// First (lexicographically smallest) s-subset of `pool` that is a clique
// (want_clique) or an independent set (!want_clique) in g.
inline bool pick_uniform_subset(const Graph& g, const VertexSet& pool, std::size_t s,
                                bool want_clique, std::size_t start, VertexSet& chosen,
                                BudgetCounter& budget) {
  if (chosen.size() == s) return true;
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool.size() - i < s - chosen.size()) return false;
    budget.tick("clique search");
    Vertex v = pool[i];
    bool fits = std::all_of(chosen.begin(), chosen.end(),
                            [&](Vertex u) { return g.adjacent(u, v) == want_clique; });
    if (!fits) continue;
    chosen.push_back(v);
    if (pick_uniform_subset(g, pool, s, want_clique, i + 1, chosen, budget)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// An s-clique (cliques are always induced), or nullopt.
inline std::optional<VertexSet> find_clique_induced(const Graph& g, std::size_t s,
                                                    const SearchLimits& limits = {}) {
  require(s >= 1, ErrorKind::kInvalidInput, "clique order must be positive");
  VertexSet pool;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 >= s) pool.push_back(v);
  detail::BudgetCounter budget(limits.node_budget);
  VertexSet chosen;
  if (detail::pick_uniform_subset(g, pool, s, true, 0, chosen, budget)) return chosen;
  return std::nullopt;
}

/// Independent s-set, or nullopt.
inline std::optional<VertexSet> find_independent_set(const Graph& g, std::size_t s,
                                                     const SearchLimits& limits = {}) {
  detail::BudgetCounter budget(limits.node_budget);
  VertexSet chosen;
  VertexSet pool = all_vertices(g);
  if (detail::pick_uniform_subset(g, pool, s, false, 0, chosen, budget)) return chosen;
  return std::nullopt;
}

/// Disjoint s-sets with every cross pair adjacent. With `induced`, both sides
/// must additionally be independent (an induced K_{s,s}).
inline std::optional<Biclique> find_biclique(const Graph& g, std::size_t s, bool induced,
                                             const SearchLimits& limits = {}) {
  require(s >= 1, ErrorKind::kInvalidInput, "biclique order must be positive");
  detail::BudgetCounter budget(limits.node_budget);
  VertexSet pool;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= s) pool.push_back(v);

  VertexSet left;
  std::optional<Biclique> found;
  // Enumerate the left side; the right side is any suitable s-subset of the
  // common neighborhood.
  auto recurse = [&](auto&& self, std::size_t start) -> bool {
    if (left.size() == s) {
      VertexSet common;
      for (Vertex v : pool) {
        if (std::find(left.begin(), left.end(), v) != left.end()) continue;
        if (std::all_of(left.begin(), left.end(), [&](Vertex u) { return g.adjacent(u, v); })) {
          common.push_back(v);
        }
      }
      if (common.size() < s) return false;
      VertexSet right;
      if (!induced) {
        right.assign(common.begin(), common.begin() + static_cast<std::ptrdiff_t>(s));
      } else if (!detail::pick_uniform_subset(g, common, s, false, 0, right, budget)) {
        return false;
      }
      found = Biclique{left, right};
      return true;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (pool.size() - i < s - left.size()) return false;
      budget.tick("biclique search");
      Vertex v = pool[i];
      if (induced && std::any_of(left.begin(), left.end(), [&](Vertex u) { return g.adjacent(u, v); })) {
        continue;
      }
      left.push_back(v);
      if (self(self, i + 1)) return true;
      left.pop_back();
    }
    return false;
  };
  recurse(recurse, 0);
  return found;
}

inline std::optional<Biclique> find_biclique_subgraph(const Graph& g, std::size_t s,
                                                      const SearchLimits& limits = {}) {
  return find_biclique(g, s, false, limits);
}

// ---------------------------------------------------------------------------
// Ramsey refinement of a biclique occurrence.

/// Exact diagonal Ramsey numbers R(t,t) known for t <= 4.
inline std::optional<std::size_t> diagonal_ramsey_number(std::size_t t) {
  static const std::map<std::size_t, std::size_t> known = {{1, 1}, {2, 2}, {3, 6}, {4, 18}};
  auto it = known.find(t);
  if (it == known.end()) return std::nullopt;
  return it->second;
}

struct RamseyOutcome {
  enum class Kind { kInducedClique, kInducedBiclique, kInsufficientSize };
  Kind kind = Kind::kInsufficientSize;
  VertexSet clique;              // kInducedClique
  Biclique biclique;             // kInducedBiclique
  std::optional<std::size_t> required_side;  // kInsufficientSize; empty if unknown
};

/// Given a K_{s,s} subgraph occurrence, returns an induced K_t or an induced
/// K_{t,t} when s reaches R(t,t). For t > 4 the caller must supply the
/// threshold; otherwise the outcome is kInsufficientSize with no requirement.
inline RamseyOutcome ramsey_refine_biclique(const Graph& g, const Biclique& sides, std::size_t t,
                                            std::optional<std::size_t> threshold = std::nullopt,
                                            const SearchLimits& limits = {}) {
  require(t >= 1, ErrorKind::kInvalidInput, "t must be positive");
  VertexSet a = canonical_set(sides.left, g.order());
  VertexSet b = canonical_set(sides.right, g.order());
  require(a.size() == b.size() && !a.empty(), ErrorKind::kInvalidInput,
          "biclique sides must be nonempty and of equal size");
  for (Vertex u : a) {
    require(!std::binary_search(b.begin(), b.end(), u), ErrorKind::kInvalidInput,
            "biclique sides overlap");
    for (Vertex v : b) {
      require(g.adjacent(u, v), ErrorKind::kInvalidInput,
              "missing cross edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
  }
  RamseyOutcome out;
  std::optional<std::size_t> required = threshold ? threshold : diagonal_ramsey_number(t);
  if (!required || a.size() < *required) {
    out.required_side = required;
    return out;
  }
  detail::BudgetCounter budget(limits.node_budget);
  VertexSet side_independent[2];
  const VertexSet* parts[2] = {&a, &b};
  for (int side = 0; side < 2; ++side) {
    VertexSet chosen;
    if (detail::pick_uniform_subset(g, *parts[side], t, true, 0, chosen, budget)) {
      out.kind = RamseyOutcome::Kind::kInducedClique;
      out.clique = chosen;
      return out;
    }
    chosen.clear();
    if (!detail::pick_uniform_subset(g, *parts[side], t, false, 0, chosen, budget)) {
      fail(ErrorKind::kInvalidInput,
           "side of size " + std::to_string(a.size()) +
               " has neither a clique nor an independent set of size " + std::to_string(t) +
               "; the supplied Ramsey threshold is too small");
    }
    side_independent[side] = chosen;
  }
  out.kind = RamseyOutcome::Kind::kInducedBiclique;
  out.biclique = {side_independent[0], side_independent[1]};
  return out;
}

// ---------------------------------------------------------------------------

struct ForbiddenPatternReport {
  bool has_clique = false;              // K_s (cliques are induced)
  bool has_biclique_subgraph = false;   // K_{s,s} as a subgraph
  bool has_biclique_induced = false;    // K_{s,s} as an induced subgraph
  bool has_induced_subdivision = false; // some subdivision of H, induced

  // Membership in the class excluding induced K_s, K_{s,s} and subdivisions of H.
  bool in_class() const { return !has_clique && !has_biclique_induced && !has_induced_subdivision; }
};

inline ForbiddenPatternReport forbidden_pattern_check(const Graph& g, const Graph& h, std::size_t s,
                                                      const SearchLimits& limits = {}) {
  ForbiddenPatternReport report;
  report.has_clique = find_clique_induced(g, s, limits).has_value();
  report.has_biclique_subgraph = find_biclique(g, s, false, limits).has_value();
  report.has_biclique_induced =
      report.has_biclique_subgraph && find_biclique(g, s, true, limits).has_value();
  report.has_induced_subdivision =
      find_subdivision(g, h, SubdivisionSpec::unbounded(Occurrence::kInduced), limits).has_value();
  return report;
}

}  // namespace tgrad
