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
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string_view>
#include <thread>
#include <vector>

#include "tgrad/coloring.hpp"
#include "tgrad/config.hpp"
#include "tgrad/densest.hpp"
#include "tgrad/graph.hpp"
#include "tgrad/numeric.hpp"
#include "tgrad/witness.hpp"

namespace tgrad {

// The three shallow-subdivision densities:
//   kNabla         pattern's (<=k)-subdivision is a subgraph
//   kNablaInduced  pattern's (<=k)-subdivision is an induced subgraph
//   kNablaExact    pattern's exact k-subdivision is an induced subgraph
enum class Measure { kNabla, kNablaInduced, kNablaExact };

inline std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::kNabla: return "nabla";
    case Measure::kNablaInduced: return "nabla_induced";
    case Measure::kNablaExact: return "nabla_exact";
  }
  return "?";
}

inline SubdivisionSpec spec_for(Measure m, std::size_t k) {
  switch (m) {
    case Measure::kNabla: return SubdivisionSpec::at_most(k, Occurrence::kSubgraph);
    case Measure::kNablaInduced: return SubdivisionSpec::at_most(k, Occurrence::kInduced);
    case Measure::kNablaExact: return SubdivisionSpec::exactly(k, Occurrence::kInduced);
  }
  return {};
}

struct DensityReport {
  std::size_t k = 0;
  Measure measure = Measure::kNabla;
  Rational value;                   // average degree of witness_pattern
  Graph witness_pattern;            // H attaining value; vertex i <-> witness.branch_map[i]
  SubdivisionWitness witness;
  bool exact = true;                // false: value is only a certified lower bound
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

// Exact maximum number of pattern edges realizable on a fixed branch set.
//
// A pattern edge between two branch vertices is a host path whose internal
// vertices avoid the branch set; paths must be internally disjoint (and, in
// induced mode, pairwise non-adjacent and chordless). Parallel paths between
// one pair count once because patterns are simple.
class BranchSetPacker {
 public:
  struct Candidate {
    Mask internal = 0;
    Mask block = 0;  // vertices no other path may use as internal vertices
    VertexSet sequence;
  };
  struct Pair {
    std::size_t iu = 0, iv = 0;  // positions within the branch set
    std::vector<Candidate> candidates;
  };
  struct Result {
    bool feasible = false;
    std::size_t edges = 0;
    std::vector<std::size_t> pair_index;   // chosen pairs (indices into pairs())
    std::vector<std::size_t> cand_index;   // chosen candidate per chosen pair
  };

  BranchSetPacker(const Graph& g, Mask branch, const SubdivisionSpec& spec)
      : g_(g), branch_(branch), induced_(spec.induced()), lo_(spec.min_internal()),
        hi_(std::min(spec.max_internal(g.order()), g.order())) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (branch & bit(v)) members_.push_back(v);
    build_pairs();
  }

  bool feasible() const { return feasible_; }
  std::size_t forced() const { return forced_.size(); }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const std::vector<Pair>& forced_pairs() const { return forced_; }
  const VertexSet& members() const { return members_; }

  // Upper bound on edges without searching.
  std::size_t quick_bound() const {
    std::size_t with_internal = 0, direct = 0;
    for (const Pair& p : pairs_) {
      bool has_direct = !p.candidates.empty() && p.candidates.front().internal == 0;
      (has_direct ? direct : with_internal) += 1;
    }
    std::size_t room = g_.order() - members_.size();
    std::size_t per = std::max<std::size_t>(lo_, 1);
    return forced_.size() + direct + std::min(with_internal, room / per);
  }

  // `prune(edge_bound)` returns true if no solution with that many edges can
  // matter to the caller. `tick()` is called once per search node.
  template <typename Prune, typename Tick>
  Result solve(Prune&& prune, Tick&& tick) {
    Result best;
    if (!feasible_) return best;
    std::vector<std::size_t> chosen_pair, chosen_cand;
    std::size_t best_total = 0;
    bool have = false;
    auto dfs = [&](auto&& self, std::size_t idx, Mask blocked) -> void {
      tick();
      const std::size_t total = forced_.size() + chosen_pair.size();
      if (!have || total > best_total) {
        have = true;
        best_total = total;
        best.pair_index = chosen_pair;
        best.cand_index = chosen_cand;
      }
      if (idx == pairs_.size()) return;
      std::size_t reachable = 0;
      for (std::size_t j = idx; j < pairs_.size(); ++j) {
        for (const Candidate& c : pairs_[j].candidates) {
          if ((c.internal & blocked) == 0) {
            ++reachable;
            break;
          }
        }
      }
      const std::size_t bound = total + reachable;
      if (bound <= best_total || prune(bound)) return;
      const Pair& pair = pairs_[idx];
      for (std::size_t ci = 0; ci < pair.candidates.size(); ++ci) {
        const Candidate& c = pair.candidates[ci];
        if ((c.internal & blocked) != 0) continue;
        chosen_pair.push_back(idx);
        chosen_cand.push_back(ci);
        self(self, idx + 1, blocked | c.block);
        chosen_pair.pop_back();
        chosen_cand.pop_back();
      }
      self(self, idx + 1, blocked);
    };
    if (!prune(quick_bound())) dfs(dfs, 0, 0);
    best.feasible = have;
    best.edges = best_total;
    return best;
  }

 private:
  void build_pairs() {
    for (std::size_t a = 0; a < members_.size(); ++a) {
      for (std::size_t b = a + 1; b < members_.size(); ++b) {
        Vertex u = members_[a], v = members_[b];
        Pair pair{a, b, {}};
        if (induced_ && g_.adjacent(u, v)) {
          // The host edge is inside the occurrence, so it must be this path.
          if (lo_ > 0) {
            feasible_ = false;
            return;
          }
          pair.candidates.push_back({0, 0, {u, v}});
          forced_.push_back(std::move(pair));
          continue;
        }
        enumerate_paths(u, v, pair.candidates);
        prune_dominated(pair.candidates);
        if (!pair.candidates.empty()) pairs_.push_back(std::move(pair));
      }
    }
  }

  void enumerate_paths(Vertex u, Vertex v, std::vector<Candidate>& out) {
    VertexSet seq{u};
    auto dfs = [&](auto&& self, Mask internal) -> void {
      Vertex cur = seq.back();
      std::size_t count = seq.size() - 1;
      if (g_.adjacent(cur, v)) {
        if (count >= lo_) {
          Candidate c;
          c.internal = internal;
          c.block = induced_ ? closed_neighborhood(internal) : internal;
          c.sequence = seq;
          c.sequence.push_back(v);
          out.push_back(std::move(c));
          return;
        }
        if (induced_) return;
      }
      if (count >= hi_) return;
      for (Vertex y : g_.neighbors(cur)) {
        if ((branch_ & bit(y)) || (internal & bit(y))) continue;
        if (induced_) {
          Mask allowed_branch = bit(v) | (cur == u ? bit(u) : 0);
          Mask nb = g_.neighbor_mask(y);
          if (nb & branch_ & ~allowed_branch) continue;
          if (nb & internal & ~bit(cur)) continue;
          if ((nb & bit(v)) && count + 1 < lo_) continue;
        }
        seq.push_back(y);
        self(self, internal | bit(y));
        seq.pop_back();
      }
    };
    dfs(dfs, 0);
  }

  Mask closed_neighborhood(Mask set) const {
    Mask out = set;
    for (Mask rest = set; rest != 0; rest &= rest - 1) {
      out |= g_.neighbor_mask(static_cast<Vertex>(std::countr_zero(rest)));
    }
    return out;
  }

  // Keep only inclusion-minimal internal sets; a superset is never better.
  static void prune_dominated(std::vector<Candidate>& cands) {
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      int pa = std::popcount(a.internal), pb = std::popcount(b.internal);
      if (pa != pb) return pa < pb;
      return a.internal < b.internal;
    });
    std::vector<Candidate> kept;
    for (Candidate& c : cands) {
      bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Candidate& k) {
        return (k.internal & c.internal) == k.internal;
      });
      if (!dominated) kept.push_back(std::move(c));
    }
    cands = std::move(kept);
  }

  const Graph& g_;
  Mask branch_;
  bool induced_;
  std::size_t lo_;
  std::size_t hi_;
  bool feasible_ = true;
  VertexSet members_;
  std::vector<Pair> pairs_;
  std::vector<Pair> forced_;
};

struct BranchChoice {
  Mask branch = 0;
  std::size_t edges = 0;
  std::size_t order_index = 0;
  BranchSetPacker::Result result;
};

// a/b > c/d for nonnegative a, c and positive b, d.
inline bool ratio_greater(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return static_cast<unsigned __int128>(a) * d > static_cast<unsigned __int128>(c) * b;
}

inline DensityReport build_report(const Graph& g, Measure measure, std::size_t k,
                                  const SubdivisionSpec& spec, const BranchChoice& choice) {
  BranchSetPacker packer(g, choice.branch, spec);
  const VertexSet& members = packer.members();
  std::vector<Edge> pattern_edges;
  std::vector<VertexSet> sequences;
  for (const auto& pair : packer.forced_pairs()) {
    pattern_edges.push_back({static_cast<Vertex>(pair.iu), static_cast<Vertex>(pair.iv)});
    sequences.push_back(pair.candidates.front().sequence);
  }
  for (std::size_t i = 0; i < choice.result.pair_index.size(); ++i) {
    const auto& pair = packer.pairs()[choice.result.pair_index[i]];
    pattern_edges.push_back({static_cast<Vertex>(pair.iu), static_cast<Vertex>(pair.iv)});
    sequences.push_back(pair.candidates[choice.result.cand_index[i]].sequence);
  }
  DensityReport report;
  report.k = k;
  report.measure = measure;
  report.witness_pattern = Graph(members.size(), pattern_edges);
  report.witness.branch_map = members;
  report.witness.paths.resize(pattern_edges.size());
  for (std::size_t i = 0; i < pattern_edges.size(); ++i) {
    auto idx = report.witness_pattern.edge_index(pattern_edges[i].u, pattern_edges[i].v);
    report.witness.paths[*idx] = sequences[i];
  }
  report.value = average_degree(report.witness_pattern);
  return report;
}

// Candidate branch sets for hosts beyond the exhaustive bound.
inline std::vector<Mask> heuristic_branch_sets(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Mask> out;
  auto add = [&](Mask m) {
    if (m != 0 && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  };
  std::vector<std::size_t> degrees;
  for (Vertex v = 0; v < n; ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
    Mask m = 0;
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) >= *it) m |= bit(v);
    add(m);
  }
  MaxAverageDegree mad = max_average_degree(g);
  Mask core = 0;
  for (Vertex v : mad.witness) core |= bit(v);
  add(core);
  // Suffixes of the degeneracy order are successively denser cores.
  DegeneracyOrder order = degeneracy_order(g);
  Mask suffix = 0;
  for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
    suffix |= bit(*it);
    add(suffix);
  }
  return out;
}

}  // namespace detail

/// Exact value of one density measure at depth k, with a witness.
///
/// Every branch set B is scored by the maximum number of pattern edges that
/// can be packed on it; branch sets are visited in decreasing order of a cheap
/// density bound (ties by bitmask) and skipped once the bound cannot beat the
/// incumbent. The reported witness is the first optimum in that order, so the
/// result does not depend on the worker count. Hosts beyond
/// limits.exhaustive_bound (or searches that exhaust the node budget) yield a
/// certified lower bound with exact == false.
inline DensityReport density_measure(const Graph& g, Measure measure, std::size_t k,
                                     const SearchLimits& limits = {}) {
  const std::size_t n = g.order();
  require(n >= 1, ErrorKind::kDegenerateInput, "density of the empty graph");
  const SubdivisionSpec spec = spec_for(measure, k);

  if (measure == Measure::kNabla && k == 0) {
    MaxAverageDegree mad = max_average_degree(g);
    DensityReport report;
    report.k = 0;
    report.measure = measure;
    report.value = mad.value;
    report.witness_pattern = induced_subgraph(g, mad.witness).with_labels({});
    report.witness.branch_map = mad.witness;
    for (const Edge& e : report.witness_pattern.edges()) {
      report.witness.paths.push_back({mad.witness[e.u], mad.witness[e.v]});
    }
    return report;
  }
  require(n <= 64, ErrorKind::kInvalidInput,
          "shallow-subdivision densities support hosts of at most 64 vertices");

  const bool exhaustive = n <= limits.exhaustive_bound;
  // Branch sets in visiting order, with an upper bound on their edge count
  // (none for heuristic sets).
  struct Planned {
    detail::Mask mask;
    std::size_t bound_edges;
    bool bounded;
  };
  std::vector<Planned> sets;
  if (exhaustive) {
    const detail::Mask full = n == 64 ? ~detail::Mask{0} : (detail::Mask{1} << n) - 1;
    const std::size_t per = std::max<std::size_t>(spec.min_internal(), 1);
    const std::size_t hi = spec.max_internal(n);
    for (detail::Mask m = 1;; ++m) {
      std::size_t b = static_cast<std::size_t>(std::popcount(m));
      std::size_t inside = 0;
      for (detail::Mask rest = m; rest; rest &= rest - 1) {
        inside += static_cast<std::size_t>(
            std::popcount(g.neighbor_mask(static_cast<Vertex>(std::countr_zero(rest))) & m));
      }
      inside /= 2;
      bool feasible = true;
      std::size_t bound = 0;
      if (spec.induced() && spec.min_internal() > 0) {
        // Branch vertices of an induced exact subdivision are independent.
        feasible = inside == 0;
        bound = std::min(b * (b - 1) / 2, (n - b) / per);
      } else if (hi == 0) {
        bound = inside;
      } else {
        bound = inside + std::min(b * (b - 1) / 2 - inside, (n - b) / per);
      }
      if (feasible) sets.push_back({m, bound, true});
      if (m == full) break;
    }
    std::sort(sets.begin(), sets.end(), [](const Planned& a, const Planned& b) {
      std::size_t ba = static_cast<std::size_t>(std::popcount(a.mask));
      std::size_t bb = static_cast<std::size_t>(std::popcount(b.mask));
      if (detail::ratio_greater(a.bound_edges, ba, b.bound_edges, bb)) return true;
      if (detail::ratio_greater(b.bound_edges, bb, a.bound_edges, ba)) return false;
      return a.mask < b.mask;
    });
  } else {
    for (detail::Mask m : detail::heuristic_branch_sets(g)) sets.push_back({m, 0, false});
  }

  struct Incumbent {
    std::size_t edges = 0;
    std::size_t b = 0;  // 0 = none yet
    std::size_t index = 0;
  };
  std::mutex mutex;
  std::optional<detail::BranchChoice> best;  // guarded by mutex
  Incumbent incumbent;                       // guarded by mutex
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> incomplete{false};
  const std::uint64_t budget = limits.node_budget;
  const std::uint64_t per_set_budget =
      exhaustive ? budget : std::max<std::uint64_t>(budget / std::max<std::size_t>(sets.size(), 1), 1);

  // True when `edges` on a b-vertex branch set visited at position i cannot
  // displace the incumbent (ties go to the earlier position).
  auto dominated = [](const Incumbent& inc, std::size_t edges, std::size_t b, std::size_t i) {
    if (inc.b == 0) return false;
    if (detail::ratio_greater(edges, b, inc.edges, inc.b)) return false;
    if (detail::ratio_greater(inc.edges, inc.b, edges, b)) return true;
    return inc.index < i;
  };
  auto current = [&]() {
    std::lock_guard<std::mutex> lock(mutex);
    return incumbent;
  };

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= sets.size()) return;
      if (exhaustive && incomplete.load()) return;
      const Planned& plan = sets[i];
      const std::size_t b = static_cast<std::size_t>(std::popcount(plan.mask));
      if (plan.bounded && dominated(current(), plan.bound_edges, b, i)) {
        // Later sets have no larger bound and lose ties, so stop early.
        if (limits.workers <= 1) return;
        continue;
      }
      detail::BranchSetPacker packer(g, plan.mask, spec);
      if (!packer.feasible()) continue;
      auto prune = [&](std::size_t edge_bound) { return dominated(current(), edge_bound, b, i); };
      std::uint64_t local = 0;
      auto tick = [&]() {
        ++local;
        if (!exhaustive && local > per_set_budget) {
          fail(ErrorKind::kBudgetExceeded, "per-branch-set budget exhausted");
        }
        if ((local & 1023) == 0 && nodes.fetch_add(1024) + 1024 > budget) {
          fail(ErrorKind::kBudgetExceeded, "density search budget exhausted");
        }
      };
      detail::BranchSetPacker::Result result;
      try {
        result = packer.solve(prune, tick);
      } catch (const Error&) {
        incomplete.store(true);
        continue;
      }
      if (!result.feasible) continue;
      std::lock_guard<std::mutex> lock(mutex);
      if (!dominated(incumbent, result.edges, b, i) &&
          !(incumbent.b != 0 && incumbent.edges * b == result.edges * incumbent.b &&
            incumbent.index == i)) {
        incumbent = {result.edges, b, i};
        best = detail::BranchChoice{plan.mask, result.edges, i, result};
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(limits.workers, sets.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  DensityReport report;
  if (best) {
    report = detail::build_report(g, measure, k, spec, *best);
  } else {
    // Single vertex, no edges: always realizable.
    report.k = k;
    report.measure = measure;
    report.value = 0;
    report.witness_pattern = Graph(1);
    report.witness.branch_map = {0};
  }
  report.exact = exhaustive && !incomplete.load();
  if (!report.exact && measure != Measure::kNablaExact) {
    // A densest subgraph is a (<=0)-subdivision occurrence, induced or not.
    DensityReport floor = density_measure(g, Measure::kNabla, 0, limits);
    if (floor.value > report.value) {
      floor.k = k;
      floor.measure = measure;
      floor.exact = false;
      report = std::move(floor);
    }
  }
  return report;
}

inline DensityReport nabla_k(const Graph& g, std::size_t k, const SearchLimits& limits = {}) {
  return density_measure(g, Measure::kNabla, k, limits);
}
inline DensityReport nabla_induced_k(const Graph& g, std::size_t k, const SearchLimits& limits = {}) {
  return density_measure(g, Measure::kNablaInduced, k, limits);
}
inline DensityReport nabla_exact_k(const Graph& g, std::size_t k, const SearchLimits& limits = {}) {
  return density_measure(g, Measure::kNablaExact, k, limits);
}

struct ProfileRow {
  std::size_t k = 0;
  DensityReport nabla;
  DensityReport induced;
  DensityReport exact;
};

/// All three measures for k = 0..k_max.
inline std::vector<ProfileRow> density_profile(const Graph& g, std::size_t k_max,
                                               const SearchLimits& limits = {}) {
  std::vector<ProfileRow> rows;
  for (std::size_t k = 0; k <= k_max; ++k) {
    rows.push_back({k, nabla_k(g, k, limits), nabla_induced_k(g, k, limits),
                    nabla_exact_k(g, k, limits)});
  }
  return rows;
}

}  // namespace tgrad
