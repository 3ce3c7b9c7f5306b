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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgrad/coloring.hpp"
#include "tgrad/densest.hpp"
#include "tgrad/graph.hpp"
#include "tgrad/numeric.hpp"
#include "tgrad/witness.hpp"

namespace tgrad {

// A 3-vertex path whose endpoints lie in B and whose midpoint lies in A.
struct Hat {
  Vertex midpoint = 0;
  Vertex left = 0;   // left < right
  Vertex right = 0;

  auto operator<=>(const Hat&) const = default;
};

inline Hat make_hat(Vertex midpoint, Vertex a, Vertex b) {
  return a < b ? Hat{midpoint, a, b} : Hat{midpoint, b, a};
}

struct HatSet {
  std::vector<Hat> hats;
  BipartiteLayout layout;
  bool uncrowded = false;  // distinct endpoint pairs and distinct midpoints
  bool induced = false;    // every midpoint has exactly two neighbors in B
};

inline bool hats_uncrowded(const std::vector<Hat>& hats) {
  std::vector<Vertex> mids;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Hat& h : hats) {
    mids.push_back(h.midpoint);
    pairs.emplace_back(h.left, h.right);
  }
  std::sort(mids.begin(), mids.end());
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(mids.begin(), mids.end()) == mids.end() &&
         std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

inline std::size_t neighbors_in(const Graph& g, Vertex v, const std::vector<char>& member) {
  std::size_t count = 0;
  for (Vertex w : g.neighbors(v)) count += member[w] ? 1 : 0;
  return count;
}

inline std::vector<char> membership(std::size_t n, const VertexSet& set) {
  std::vector<char> member(n, 0);
  for (Vertex v : set) member[v] = 1;
  return member;
}

inline bool hats_induced(const Graph& g, const BipartiteLayout& layout, const std::vector<Hat>& hats) {
  std::vector<char> in_b = membership(g.order(), layout.right);
  return std::all_of(hats.begin(), hats.end(),
                     [&](const Hat& h) { return neighbors_in(g, h.midpoint, in_b) == 2; });
}

inline HatSet make_hat_set(const Graph& g, const BipartiteLayout& layout, std::vector<Hat> hats) {
  std::sort(hats.begin(), hats.end());
  HatSet out;
  out.uncrowded = hats_uncrowded(hats);
  out.induced = hats_induced(g, layout, hats);
  out.hats = std::move(hats);
  out.layout = layout;
  return out;
}

/// All hats over (A, B), sorted by (midpoint, left, right).
inline std::vector<Hat> enumerate_hats(const Graph& g, const BipartiteLayout& layout) {
  validate_layout(g, layout, false);
  std::vector<char> in_b = membership(g.order(), layout.right);
  std::vector<Hat> out;
  VertexSet mids = layout.left;
  std::sort(mids.begin(), mids.end());
  for (Vertex a : mids) {
    VertexSet ends;
    for (Vertex w : g.neighbors(a))
      if (in_b[w]) ends.push_back(w);
    for (std::size_t i = 0; i < ends.size(); ++i)
      for (std::size_t j = i + 1; j < ends.size(); ++j) out.push_back({a, ends[i], ends[j]});
  }
  return out;
}

/// Maximum uncrowded hat set. Choosing hats with distinct midpoints and
/// distinct endpoint pairs is a bipartite matching between midpoints and
/// pairs, so this is exact at any size.
inline HatSet max_uncrowded_hatset(const Graph& g, const BipartiteLayout& layout) {
  std::vector<Hat> all = enumerate_hats(g, layout);
  std::map<std::pair<Vertex, Vertex>, std::size_t> pair_id;
  for (const Hat& h : all) pair_id.emplace(std::make_pair(h.left, h.right), pair_id.size());
  std::map<Vertex, std::size_t> mid_id;
  for (const Hat& h : all) mid_id.emplace(h.midpoint, mid_id.size());
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> options(mid_id.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    options[mid_id[all[i].midpoint]].push_back({pair_id[{all[i].left, all[i].right}], i});
  }
  std::vector<std::int64_t> pair_owner(pair_id.size(), -1);  // midpoint index
  std::vector<std::int64_t> mid_hat(mid_id.size(), -1);      // hat index
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t m) -> bool {
    for (auto [p, hat] : options[m]) {
      if (seen[p]) continue;
      seen[p] = 1;
      if (pair_owner[p] < 0 || self(self, static_cast<std::size_t>(pair_owner[p]))) {
        pair_owner[p] = static_cast<std::int64_t>(m);
        mid_hat[m] = static_cast<std::int64_t>(hat);
        return true;
      }
    }
    return false;
  };
  for (std::size_t m = 0; m < options.size(); ++m) {
    seen.assign(pair_id.size(), 0);
    augment(augment, m);
  }
  std::vector<Hat> chosen;
  for (std::size_t m = 0; m < mid_hat.size(); ++m) {
    if (mid_hat[m] >= 0 && pair_owner[pair_id[{all[mid_hat[m]].left, all[mid_hat[m]].right}]] ==
                               static_cast<std::int64_t>(m)) {
      chosen.push_back(all[static_cast<std::size_t>(mid_hat[m])]);
    }
  }
  return make_hat_set(g, layout, std::move(chosen));
}

/// Largest induced uncrowded hat set: one hat per distinct endpoint pair among
/// midpoints with exactly two B-neighbors (smallest midpoint wins).
inline HatSet max_induced_uncrowded_hatset(const Graph& g, const BipartiteLayout& layout) {
  validate_layout(g, layout, false);
  std::vector<char> in_b = membership(g.order(), layout.right);
  std::map<std::pair<Vertex, Vertex>, Vertex> by_pair;
  for (Vertex a : layout.left) {
    VertexSet ends;
    for (Vertex w : g.neighbors(a))
      if (in_b[w]) ends.push_back(w);
    if (ends.size() != 2) continue;
    auto key = std::make_pair(ends[0], ends[1]);
    auto it = by_pair.find(key);
    if (it == by_pair.end() || a < it->second) by_pair[key] = a;
  }
  std::vector<Hat> hats;
  for (const auto& [key, a] : by_pair) hats.push_back({a, key.first, key.second});
  return make_hat_set(g, layout, std::move(hats));
}

// ---------------------------------------------------------------------------
// Induced hat extraction.

enum class SearchStatus { kFound, kSearchExhausted };

struct HatInductionOptions {
  Rational r = 1;
  bool relaxed = false;
  // Relaxed mode only: hypothesis threshold on (max uncrowded hats)/|B|
  // (unchecked when empty) and required (hats)/|B'| on output (defaults to
  // r^9/2^15 when empty).
  std::optional<Rational> input_ratio;
  std::optional<Rational> output_ratio;
  // Largest |B| for which all subsets of B are tried.
  std::size_t exhaustive_bound = 16;
};

inline Rational lemma_hats_input_ratio(const Rational& r) {
  return pow_rational(r, 11) / Rational(256);
}
inline Rational lemma_hats_output_ratio(const Rational& r) {
  return pow_rational(r, 9) / Rational(32768);
}

struct HatInductionResult {
  SearchStatus status = SearchStatus::kSearchExhausted;
  BipartiteLayout layout;  // (A', B') in host vertex ids
  Graph subgraph;          // host[A' u B'], vertex i <-> i-th smallest kept vertex
  HatSet hats;             // all 3-vertex paths of subgraph with midpoint in A' (host ids)
  Rational required_ratio;
  std::string note;
};

namespace detail {

// For a fixed B', the best A' keeps one midpoint per endpoint pair among the
// A-vertices with exactly two neighbors in B'.
inline std::vector<Hat> hats_for_right_side(const Graph& g, const VertexSet& left,
                                            const std::vector<char>& in_right) {
  std::map<std::pair<Vertex, Vertex>, Vertex> by_pair;
  for (Vertex a : left) {
    Vertex ends[2];
    std::size_t count = 0;
    for (Vertex w : g.neighbors(a)) {
      if (!in_right[w]) continue;
      if (count < 2) ends[count] = w;
      ++count;
    }
    if (count != 2) continue;
    auto key = std::make_pair(std::min(ends[0], ends[1]), std::max(ends[0], ends[1]));
    auto it = by_pair.find(key);
    if (it == by_pair.end() || a < it->second) by_pair[key] = a;
  }
  std::vector<Hat> hats;
  for (const auto& [key, a] : by_pair) hats.push_back({a, key.first, key.second});
  std::sort(hats.begin(), hats.end());
  return hats;
}

inline HatInductionResult finish_induction(const Graph& g, const std::vector<Hat>& hats,
                                           const VertexSet& right, const Rational& ratio) {
  HatInductionResult out;
  out.status = SearchStatus::kFound;
  for (const Hat& h : hats) out.layout.left.push_back(h.midpoint);
  std::sort(out.layout.left.begin(), out.layout.left.end());
  out.layout.right = right;
  VertexSet kept = out.layout.left;
  kept.insert(kept.end(), right.begin(), right.end());
  out.subgraph = induced_subgraph(g, kept);
  out.hats = make_hat_set(g, out.layout, enumerate_hats(g, out.layout));
  out.required_ratio = ratio;
  return out;
}

}  // namespace detail

/// Searches for an induced subgraph G' over (A', B') with B' nonempty in
/// which the set of all hats is induced, uncrowded, and has at least
/// ratio*|B'| members. Strict mode first checks the hypotheses (A-degrees at
/// most 4r; an uncrowded set of r^11/2^8 |B| hats) and throws
/// PreconditionFailed if they fail.
///
/// The search first runs the cleaning fixpoint (drop midpoints without exactly
/// two B'-neighbors, keep one midpoint per pair, drop uncovered B'-vertices)
/// and then, for |B| within the exhaustive bound, tries every B' subset.
inline HatInductionResult induce_hats_search(const Graph& g, const BipartiteLayout& layout,
                                             const HatInductionOptions& options) {
  validate_layout(g, layout, true);
  require(!layout.right.empty(), ErrorKind::kPreconditionFailed, "B is empty");
  require(options.r > 0, ErrorKind::kInvalidInput, "r must be positive");
  const Rational degree_cap = 4 * options.r;
  for (Vertex a : layout.left) {
    require(Rational(g.degree(a)) <= degree_cap, ErrorKind::kPreconditionFailed,
            "vertex " + std::to_string(a) + " of A has degree " + std::to_string(g.degree(a)) +
                " > 4r");
  }
  std::optional<Rational> input_ratio =
      options.relaxed ? options.input_ratio : std::optional<Rational>(lemma_hats_input_ratio(options.r));
  const Rational output_ratio = options.relaxed && options.output_ratio
                                    ? *options.output_ratio
                                    : lemma_hats_output_ratio(options.r);
  if (input_ratio) {
    HatSet best = max_uncrowded_hatset(g, layout);
    require(Rational(best.hats.size()) >= *input_ratio * Rational(layout.right.size()),
            ErrorKind::kPreconditionFailed,
            "only " + std::to_string(best.hats.size()) + " uncrowded hats; need " +
                to_decimal_string(*input_ratio * Rational(layout.right.size())));
  }

  VertexSet left = layout.left;
  std::sort(left.begin(), left.end());
  VertexSet right = layout.right;
  std::sort(right.begin(), right.end());

  // Cleaning fixpoint.
  {
    std::vector<char> in_right = membership(g.order(), right);
    std::vector<Hat> hats;
    for (;;) {
      hats = detail::hats_for_right_side(g, left, in_right);
      std::vector<char> covered(g.order(), 0);
      for (const Hat& h : hats) covered[h.left] = covered[h.right] = 1;
      bool changed = false;
      for (Vertex b : right) {
        if (in_right[b] && !covered[b]) {
          in_right[b] = 0;
          changed = true;
        }
      }
      if (!changed) break;
    }
    VertexSet kept;
    for (Vertex b : right)
      if (in_right[b]) kept.push_back(b);
    if (!kept.empty() && Rational(hats.size()) >= output_ratio * Rational(kept.size())) {
      return detail::finish_induction(g, hats, kept, output_ratio);
    }
  }

  if (right.size() <= options.exhaustive_bound && right.size() < 63) {
    const std::uint64_t limit = std::uint64_t{1} << right.size();
    std::optional<std::pair<std::vector<Hat>, VertexSet>> best;
    std::size_t best_hats = 0, best_size = 0;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      std::vector<char> in_right(g.order(), 0);
      VertexSet sub;
      for (std::size_t i = 0; i < right.size(); ++i) {
        if (mask >> i & 1U) {
          in_right[right[i]] = 1;
          sub.push_back(right[i]);
        }
      }
      std::vector<Hat> hats = detail::hats_for_right_side(g, left, in_right);
      if (!best || hats.size() * best_size > best_hats * sub.size()) {
        best_hats = hats.size();
        best_size = sub.size();
        best = std::make_pair(std::move(hats), std::move(sub));
      }
    }
    if (best && Rational(best_hats) >= output_ratio * Rational(best_size)) {
      return detail::finish_induction(g, best->first, best->second, output_ratio);
    }
  }
  HatInductionResult out;
  out.status = SearchStatus::kSearchExhausted;
  out.required_ratio = output_ratio;
  out.note = "no induced uncrowded hat family reaches ratio " + to_decimal_string(output_ratio) +
             (right.size() <= options.exhaustive_bound ? " (all subsets of B tried)"
                                                       : " (cleaning only; B beyond exhaustive bound)");
  return out;
}

// ---------------------------------------------------------------------------
// Induced 1-subdivision extraction with branch vertices in B.

struct FixBranchOptions {
  Rational r = 1;
  bool relaxed = false;
  // Relaxed mode only: optional hat-ratio hypothesis and the required
  // average degree of the extracted pattern (defaults to r).
  std::optional<Rational> hat_ratio;
  std::optional<Rational> target;
  std::size_t exhaustive_bound = 20;
};

struct FixBranchResult {
  SearchStatus status = SearchStatus::kSearchExhausted;
  Graph pattern;                 // H; vertex i <-> witness.branch_map[i]
  SubdivisionWitness witness;    // exactly(1), induced, in host ids
  Rational pattern_average_degree;
  Rational target;
  std::string note;
};

inline const Rational& two_pow_25() {
  static const Rational value = Rational(BigInt(1) << 25);
  return value;
}

/// Searches for an induced 1-subdivision of a graph with average degree at
/// least the target, with every branch vertex in B and every subdividing
/// vertex a hat midpoint from A.
///
/// Such an occurrence is an independent set I of G[B] together with one
/// induced hat per endpoint pair inside I, so the search maximizes the hat
/// graph's density over independent subsets of B: exactly by a flow when
/// G[B] is edgeless, by enumeration when |B| is within the exhaustive bound,
/// and over color classes of G[B] otherwise.
inline FixBranchResult fix_branch_search(const Graph& g, const BipartiteLayout& partition,
                                         const FixBranchOptions& options) {
  validate_layout(g, partition, false);
  require(partition.left.size() + partition.right.size() == g.order(), ErrorKind::kInvalidInput,
          "(A, B) must partition the vertex set");
  require(options.r > 0, ErrorKind::kInvalidInput, "r must be positive");
  require(is_independent(g, partition.left), ErrorKind::kPreconditionFailed,
          "A is not an independent set");
  Graph g_b = induced_subgraph(g, partition.right);
  VertexSet b_sorted = partition.right;
  std::sort(b_sorted.begin(), b_sorted.end());

  HatSet induced_hats = max_induced_uncrowded_hatset(g, partition);
  if (!options.relaxed) {
    require(is_integer(options.r) && options.r >= two_pow_25(), ErrorKind::kPreconditionFailed,
            "r must be an integer of at least 2^25");
    const BigInt r_int = boost::multiprecision::numerator(options.r);
    require(BigInt(g_b.order()) <= r_int || colorable_with(g_b, static_cast<std::size_t>(r_int)),
            ErrorKind::kPreconditionFailed, "chi(G[B]) > r");
    require(g_b.order() == 0 || max_average_degree(g_b).value <= pow_rational(options.r, 3),
            ErrorKind::kPreconditionFailed, "maximum average degree of G[B] exceeds r^3");
  }
  std::optional<Rational> hat_ratio =
      options.relaxed ? options.hat_ratio : std::optional<Rational>(lemma_hats_output_ratio(options.r));
  if (hat_ratio) {
    require(Rational(induced_hats.hats.size()) >= *hat_ratio * Rational(partition.right.size()),
            ErrorKind::kPreconditionFailed,
            "only " + std::to_string(induced_hats.hats.size()) + " induced uncrowded hats; need " +
                to_decimal_string(*hat_ratio * Rational(partition.right.size())));
  }
  const Rational target = options.relaxed && options.target ? *options.target : options.r;

  // Hat graph on B (indices into b_sorted).
  std::map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < b_sorted.size(); ++i) pos[b_sorted[i]] = i;
  std::vector<Edge> hat_edges;
  std::map<std::pair<std::size_t, std::size_t>, Vertex> midpoint_of;
  for (const Hat& h : induced_hats.hats) {
    std::size_t a = pos[h.left], b = pos[h.right];
    hat_edges.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
    midpoint_of[{std::min(a, b), std::max(a, b)}] = h.midpoint;
  }
  Graph hat_graph(b_sorted.size(), hat_edges);

  FixBranchResult out;
  out.target = target;
  std::optional<VertexSet> chosen;  // indices into b_sorted
  Rational chosen_value = -1;
  auto consider = [&](const VertexSet& idx) {
    if (idx.empty()) return;
    Rational value = average_degree(idx.size(), count_edges_within(hat_graph, idx));
    if (!chosen || value > chosen_value) {
      chosen = idx;
      chosen_value = value;
    }
  };
  if (b_sorted.empty()) {
    out.note = "B is empty";
    return out;
  }
  if (g_b.size() == 0) {
    consider(max_average_degree(hat_graph).witness);
  } else if (b_sorted.size() <= options.exhaustive_bound) {
    VertexSet current;
    auto walk = [&](auto&& self, std::size_t next) -> void {
      consider(current);
      for (std::size_t i = next; i < b_sorted.size(); ++i) {
        bool ok = std::none_of(current.begin(), current.end(),
                               [&](std::size_t j) { return g_b.adjacent(static_cast<Vertex>(j), static_cast<Vertex>(i)); });
        if (!ok) continue;
        current.push_back(static_cast<Vertex>(i));
        self(self, i + 1);
        current.pop_back();
      }
    };
    walk(walk, 0);
  } else {
    Coloring coloring = greedy_coloring(g_b);
    for (std::size_t c = 0; c < color_count(coloring); ++c) {
      VertexSet cls;
      for (Vertex v = 0; v < g_b.order(); ++v)
        if (coloring[v] == c) cls.push_back(v);
      Graph sub = induced_subgraph(hat_graph, cls);
      MaxAverageDegree local = max_average_degree(sub);
      VertexSet mapped;
      for (Vertex v : local.witness) mapped.push_back(cls[v]);
      consider(mapped);
    }
  }
  if (!chosen || chosen_value < target) {
    out.pattern_average_degree = chosen ? chosen_value : Rational(0);
    out.note = "densest induced 1-subdivision found has average degree " +
               to_decimal_string(out.pattern_average_degree) + " < target " +
               to_decimal_string(target);
    return out;
  }
  const VertexSet& idx = *chosen;
  std::vector<Edge> pattern_edges;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (hat_graph.adjacent(idx[i], idx[j])) pattern_edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  out.pattern = Graph(idx.size(), pattern_edges);
  for (Vertex i : idx) out.witness.branch_map.push_back(b_sorted[i]);
  for (const Edge& e : out.pattern.edges()) {
    std::size_t a = idx[e.u], b = idx[e.v];
    Vertex mid = midpoint_of[{std::min(a, b), std::max(a, b)}];
    out.witness.paths.push_back({b_sorted[a], mid, b_sorted[b]});
  }
  auto violations = verify_witness(g, out.pattern, SubdivisionSpec::exactly(1, Occurrence::kInduced),
                                   out.witness);
  if (!violations.empty()) {
    fail(ErrorKind::kInvalidInput, "internal error: extracted witness fails verification: " +
                                       std::string(to_string(violations.front().kind)));
  }
  out.status = SearchStatus::kFound;
  out.pattern_average_degree = chosen_value;
  return out;
}

}  // namespace tgrad
