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
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tgrad/bounds.hpp"
#include "tgrad/coloring.hpp"
#include "tgrad/config.hpp"
#include "tgrad/densest.hpp"
#include "tgrad/density.hpp"
#include "tgrad/errors.hpp"
#include "tgrad/graph.hpp"
#include "tgrad/hats.hpp"
#include "tgrad/numeric.hpp"
#include "tgrad/witness.hpp"

namespace tgrad {

struct PipelineParams {
  std::size_t k = 1;
  BigInt r = 1;
  BigInt s = 1;
  bool relaxed = false;
};

enum class Relation { kLess, kLessEqual, kGreaterEqual, kEqual };

inline std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::kLess: return "<";
    case Relation::kLessEqual: return "<=";
    case Relation::kGreaterEqual: return ">=";
    case Relation::kEqual: return "=";
  }
  return "?";
}

inline bool compare(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::kLess: return lhs < rhs;
    case Relation::kLessEqual: return lhs <= rhs;
    case Relation::kGreaterEqual: return lhs >= rhs;
    case Relation::kEqual: return lhs == rhs;
  }
  return false;
}

struct Inequality {
  std::string name;
  Rational lhs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
  bool holds = false;
  std::string note;

  bool operator==(const Inequality&) const = default;
};

inline Inequality make_inequality(std::string name, Rational lhs, Relation rel, Rational rhs,
                                  std::string note = {}) {
  Inequality out{std::move(name), std::move(lhs), rel, std::move(rhs), false, std::move(note)};
  out.holds = compare(out.lhs, out.relation, out.rhs);
  return out;
}

/// Stage ids in execution order.
inline const std::vector<std::string>& pipeline_stage_ids() {
  static const std::vector<std::string> ids = {"H1", "G1", "S",  "H2", "G2",
                                               "A2prime", "P", "G3", "G4", "G5"};
  return ids;
}

struct StageCertificate {
  std::string stage;
  std::string claim;
  std::vector<Inequality> inequalities;
  bool pass = false;
  // Named vertex or edge-index sets. Sets of H-edges hold indices into the
  // seed pattern's edge list; sets of host vertices hold G vertex ids.
  std::vector<std::pair<std::string, std::vector<std::uint64_t>>> artifacts;
  std::string note;

  bool operator==(const StageCertificate&) const = default;
};

enum class PipelineOutcome { kCompleted, kHalted };
enum class HaltReason { kNone, kInequalityFailed, kPreconditionFailed, kSearchExhausted };

inline std::string_view to_string(PipelineOutcome o) {
  return o == PipelineOutcome::kCompleted ? "completed" : "halted";
}

inline std::string_view to_string(HaltReason r) {
  switch (r) {
    case HaltReason::kNone: return "none";
    case HaltReason::kInequalityFailed: return "inequality_failed";
    case HaltReason::kPreconditionFailed: return "precondition_failed";
    case HaltReason::kSearchExhausted: return "search_exhausted";
  }
  return "?";
}

struct PipelineCertificate {
  PipelineParams params;
  BigInt effective_r;
  Rational d;
  Graph seed_pattern;
  SubdivisionWitness seed_witness;  // as supplied or found, before normalization
  bool seed_from_search = false;
  std::vector<StageCertificate> stages;
  PipelineOutcome outcome = PipelineOutcome::kHalted;
  std::string halted_stage;
  HaltReason halt_reason = HaltReason::kNone;
  std::string halt_detail;
  std::optional<Graph> final_pattern;
  std::optional<SubdivisionWitness> final_witness;

  bool completed() const { return outcome == PipelineOutcome::kCompleted; }
  const StageCertificate* stage(std::string_view id) const {
    for (const auto& s : stages)
      if (s.stage == id) return &s;
    return nullptr;
  }
};

namespace detail {

inline Rational safe_average(std::size_t vertices, std::size_t edges) {
  return vertices == 0 ? Rational(0) : Rational(2 * edges, vertices);
}

inline std::vector<std::uint64_t> as_ids(const std::vector<std::size_t>& xs) {
  return {xs.begin(), xs.end()};
}
inline std::vector<std::uint64_t> as_ids(const VertexSet& xs) { return {xs.begin(), xs.end()}; }

// Shortest path from path.front() to path.back() inside G[path's vertices].
inline VertexSet shortcut_path(const Graph& g, const VertexSet& path) {
  if (path.size() <= 2) return path;
  std::map<Vertex, Vertex> parent;
  std::set<Vertex> allowed(path.begin(), path.end());
  const Vertex from = path.front(), to = path.back();
  std::deque<Vertex> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (Vertex y : g.neighbors(x)) {
      if (!allowed.count(y) || parent.count(y)) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  VertexSet out{to};
  while (out.back() != from) out.push_back(parent.at(out.back()));
  std::reverse(out.begin(), out.end());
  return out;
}

inline VertexSet interior(const VertexSet& path) {
  if (path.size() <= 2) return {};
  return VertexSet(path.begin() + 1, path.end() - 1);
}

// Bipartite graph with vertices 0..|paths|-1 for the given paths and
// |paths|+j for right[j]; path i is joined to right[j] when some interior
// vertex of the path is adjacent to right[j] in g.
inline Graph interior_contact_graph(const Graph& g, const std::vector<VertexSet>& paths,
                                    const VertexSet& right) {
  std::map<Vertex, std::size_t> pos;
  for (std::size_t j = 0; j < right.size(); ++j) pos[right[j]] = j;
  std::set<Edge> edges;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (Vertex x : interior(paths[i])) {
      for (Vertex y : g.neighbors(x)) {
        auto it = pos.find(y);
        if (it == pos.end()) continue;
        edges.insert(make_edge(static_cast<Vertex>(i), static_cast<Vertex>(paths.size() + it->second)));
      }
    }
  }
  return Graph(paths.size() + right.size(), std::vector<Edge>(edges.begin(), edges.end()));
}

class PipelineRun {
 public:
  PipelineRun(const Graph& g, const PipelineParams& params, const SearchLimits& limits)
      : g_(g), params_(params), limits_(limits) {}

  PipelineCertificate run(const std::optional<std::pair<Graph, SubdivisionWitness>>& seed) {
    require(params_.k >= 1, ErrorKind::kInvalidInput, "pipeline needs k >= 1");
    require(params_.r >= 1 && params_.s >= 1, ErrorKind::kInvalidInput, "r and s must be positive");
    cert_.params = params_;
    cert_.effective_r = params_.relaxed ? params_.r : raised_r(params_.r, params_.k, params_.s);
    r_ = Rational(cert_.effective_r);
    cert_.d = d_constant(params_.r, params_.k, params_.s, params_.relaxed);
    s_ = Rational(params_.s);
    sk_ = s_ * params_.k;

    if (seed) {
      auto violations = verify_witness(g_, seed->first, SubdivisionSpec::at_most(params_.k), seed->second);
      require(violations.empty(), ErrorKind::kInvalidInput,
              "seed witness is not a (<=k)-subdivision of the seed pattern in G");
      h_ = seed->first;
      phi_ = seed->second;
    } else {
      DensityReport rep = nabla_k(g_, params_.k, limits_);
      h_ = rep.witness_pattern;
      phi_ = rep.witness;
      cert_.seed_from_search = true;
    }
    cert_.seed_pattern = h_;
    cert_.seed_witness = phi_;
    mad0_ = max_average_degree(g_).value;

    if (stage_h1() && stage_g1() && stage_s() && stage_h2() && stage_g2() && stage_a2prime() &&
        stage_p() && stage_g3() && stage_g4() && stage_g5()) {
      cert_.outcome = PipelineOutcome::kCompleted;
    }
    return std::move(cert_);
  }

 private:
  bool finish(StageCertificate st) {
    st.pass = std::all_of(st.inequalities.begin(), st.inequalities.end(),
                          [](const Inequality& q) { return q.holds; });
    const bool ok = st.pass;
    if (!ok) {
      cert_.outcome = PipelineOutcome::kHalted;
      cert_.halted_stage = st.stage;
      cert_.halt_reason = HaltReason::kInequalityFailed;
      for (const auto& q : st.inequalities) {
        if (!q.holds) {
          cert_.halt_detail = "failed: " + q.name;
          break;
        }
      }
    }
    cert_.stages.push_back(std::move(st));
    return ok;
  }

  bool halt(StageCertificate st, HaltReason reason, std::string detail) {
    st.pass = false;
    st.note = detail;
    cert_.outcome = PipelineOutcome::kHalted;
    cert_.halted_stage = st.stage;
    cert_.halt_reason = reason;
    cert_.halt_detail = std::move(detail);
    cert_.stages.push_back(std::move(st));
    return false;
  }

  // Edge-index helpers for the seed pattern H.
  std::vector<VertexSet> paths_of(const std::vector<std::size_t>& edge_ids) const {
    std::vector<VertexSet> out;
    for (std::size_t e : edge_ids) out.push_back(paths_[e]);
    return out;
  }

  VertexSet union_interiors(const std::vector<std::size_t>& edge_ids) const {
    VertexSet out;
    for (std::size_t e : edge_ids) {
      VertexSet in = interior(paths_[e]);
      out.insert(out.end(), in.begin(), in.end());
    }
    return canonical_set(std::move(out), g_.order());
  }

  bool stage_h1() {
    StageCertificate st;
    st.stage = "H1";
    st.claim = "edges of H whose path has exactly k internal vertices carry average degree at least d";
    const std::size_t k = params_.k;
    std::size_t shortened = 0;
    paths_ = phi_.paths;
    for (auto& p : paths_) {
      VertexSet q = shortcut_path(g_, p);
      if (q.size() != p.size()) ++shortened;
      p = std::move(q);
    }
    for (std::size_t e = 0; e < paths_.size(); ++e)
      if (paths_[e].size() == k + 2) h1_.push_back(e);

    Rational prev;
    bool prev_exact = true;
    if (k == 1) {
      prev = mad0_;
    } else {
      DensityReport rep = nabla_k(g_, k - 1, limits_);
      prev = rep.value;
      prev_exact = rep.exact;
    }
    st.inequalities.push_back(make_inequality("mad(G) <= s", mad0_, Relation::kLessEqual, s_));
    st.inequalities.push_back(make_inequality(
        "avg(H) >= nabla_{k-1}(G) + d", safe_average(h_.order(), h_.size()), Relation::kGreaterEqual,
        prev + cert_.d, prev_exact ? "" : "right side uses a lower bound for nabla_{k-1}(G)"));
    st.inequalities.push_back(make_inequality("avg(H1) >= d", safe_average(h_.order(), h1_.size()),
                                              Relation::kGreaterEqual, cert_.d));
    st.artifacts.push_back({"B", as_ids(phi_.branch_map)});
    st.artifacts.push_back({"H1_edges", as_ids(h1_)});
    st.note = std::to_string(shortened) + " path(s) shortened to induced paths";
    return finish(std::move(st));
  }

  bool stage_g1() {
    StageCertificate st;
    st.stage = "G1";
    st.claim = "the contact graph G1 on E(H1) has maximum average degree at most sk and sk+1 colors suffice";
    std::vector<VertexSet> paths = paths_of(h1_);
    std::map<Vertex, std::size_t> owner;
    for (std::size_t i = 0; i < paths.size(); ++i)
      for (Vertex x : interior(paths[i])) owner[x] = i;
    std::set<Edge> edges;
    for (const Edge& e : g_.edges()) {
      auto a = owner.find(e.u), b = owner.find(e.v);
      if (a == owner.end() || b == owner.end() || a->second == b->second) continue;
      edges.insert(make_edge(static_cast<Vertex>(a->second), static_cast<Vertex>(b->second)));
    }
    g1_ = Graph(paths.size(), std::vector<Edge>(edges.begin(), edges.end()));
    MaxAverageDegree mad1 = max_average_degree(g1_);
    st.inequalities.push_back(make_inequality("mad(G1) <= sk", mad1.value, Relation::kLessEqual, sk_));

    auto spot_check = [&](const std::string& label, const VertexSet& c) {
      std::vector<std::size_t> ids;
      for (Vertex i : c) ids.push_back(h1_[i]);
      VertexSet d = union_interiors(ids);
      const std::size_t e_c = count_edges_within(g1_, c);
      const std::size_t e_d = count_edges_within(g_, d);
      st.inequalities.push_back(make_inequality("|E(G1[" + label + "])| <= |E(G[D_" + label + "])|",
                                                Rational(e_c), Relation::kLessEqual, Rational(e_d)));
      st.inequalities.push_back(make_inequality(
          "|E(G[D_" + label + "])| <= (s/2) k |" + label + "|", Rational(e_d), Relation::kLessEqual,
          s_ / 2 * params_.k * Rational(c.size())));
    };
    spot_check("C_all", all_vertices(g1_));
    if (mad1.witness.size() != g1_.order()) spot_check("C_dense", mad1.witness);

    coloring_ = greedy_coloring(g1_);
    st.inequalities.push_back(make_inequality("colors(G1) <= sk + 1", Rational(color_count(coloring_)),
                                              Relation::kLessEqual, sk_ + 1));
    st.artifacts.push_back({"G1_densest", as_ids(mad1.witness)});
    st.note = "|E(G1)| = " + std::to_string(g1_.size());
    return finish(std::move(st));
  }

  bool stage_s() {
    StageCertificate st;
    st.stage = "S";
    st.claim = "a color class of G1 gives an independent set S with |S| >= |E(H1)|/(sk+1)";
    VertexSet s = independent_set_from_coloring(g1_);
    for (Vertex i : s) s_edges_.push_back(h1_[i]);
    std::sort(s_edges_.begin(), s_edges_.end());
    st.inequalities.push_back(make_inequality("|S| >= |E(H1)|/(sk+1)", Rational(s.size()),
                                              Relation::kGreaterEqual, Rational(h1_.size()) / (sk_ + 1)));
    st.inequalities.push_back(make_inequality("|E(G1[S])| <= 0", Rational(count_edges_within(g1_, s)),
                                              Relation::kLessEqual, Rational(0)));
    st.artifacts.push_back({"S", as_ids(s_edges_)});
    return finish(std::move(st));
  }

  bool stage_h2() {
    StageCertificate st;
    st.stage = "H2";
    st.claim = "the spanning subgraph H2 of H with edge set S has average degree at least d/(sk+1)";
    st.inequalities.push_back(make_inequality("avg(H2) >= d/(sk+1)", safe_average(h_.order(), s_edges_.size()),
                                              Relation::kGreaterEqual, cert_.d / (sk_ + 1)));
    return finish(std::move(st));
  }

  bool stage_g2() {
    StageCertificate st;
    st.stage = "G2";
    st.claim = "the bipartite contact graph G2 over (A2, B) has at most 2r|A2| edges";
    b_ = canonical_set(phi_.branch_map, g_.order());
    g2_ = interior_contact_graph(g_, paths_of(s_edges_), b_);
    VertexSet d2 = union_interiors(s_edges_);
    VertexSet d2b = d2;
    d2b.insert(d2b.end(), b_.begin(), b_.end());
    d2b = canonical_set(std::move(d2b), g_.order());
    const std::size_t e_d2b = count_edges_within(g_, d2b);
    st.inequalities.push_back(make_inequality("|E(G2)| <= |E(G[D2 u B])|", Rational(g2_.size()),
                                              Relation::kLessEqual, Rational(e_d2b)));
    st.inequalities.push_back(make_inequality("|E(G[D2 u B])| <= (mad(G)/2)|D2 u B|", Rational(e_d2b),
                                              Relation::kLessEqual, mad0_ / 2 * Rational(d2b.size())));
    st.inequalities.push_back(make_inequality("|E(G2)| <= 2r|A2|", Rational(g2_.size()), Relation::kLessEqual,
                                              2 * r_ * Rational(s_edges_.size()),
                                              r_ * 2 >= sk_ ? "" : "r < sk/2: not implied by the hypotheses"));
    return finish(std::move(st));
  }

  bool stage_a2prime() {
    StageCertificate st;
    st.stage = "A2prime";
    st.claim = "at least half of A2 has degree at most 4r in G2";
    for (std::size_t i = 0; i < s_edges_.size(); ++i)
      if (Rational(g2_.degree(static_cast<Vertex>(i))) <= 4 * r_) a2p_.push_back(s_edges_[i]);
    st.inequalities.push_back(make_inequality("|A2'| >= |A2|/2", Rational(a2p_.size()), Relation::kGreaterEqual,
                                              Rational(s_edges_.size()) / 2));
    st.artifacts.push_back({"A2prime", as_ids(a2p_)});
    return finish(std::move(st));
  }

  bool stage_p() {
    StageCertificate st;
    st.stage = "P";
    st.claim = "the paths of A2' give an uncrowded hat set P over (A2', B) with |P| >= r^11/2^8 |B|";
    g2p_ = interior_contact_graph(g_, paths_of(a2p_), b_);
    std::map<Vertex, std::size_t> pos;
    for (std::size_t j = 0; j < b_.size(); ++j) pos[b_[j]] = j;
    const std::size_t na = a2p_.size();
    std::vector<Hat> hats;
    std::size_t missing = 0;
    for (std::size_t i = 0; i < na; ++i) {
      const VertexSet& p = paths_[a2p_[i]];
      Vertex u = static_cast<Vertex>(na + pos.at(p.front()));
      Vertex v = static_cast<Vertex>(na + pos.at(p.back()));
      if (!g2p_.adjacent(static_cast<Vertex>(i), u) || !g2p_.adjacent(static_cast<Vertex>(i), v)) ++missing;
      hats.push_back(make_hat(static_cast<Vertex>(i), u, v));
    }
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (const Hat& h : hats) pairs.insert({h.left, h.right});
    st.inequalities.push_back(make_inequality("|P| >= r^11/2^8 |B|", Rational(hats.size()),
                                              Relation::kGreaterEqual,
                                              lemma_hats_input_ratio(r_) * Rational(b_.size())));
    st.inequalities.push_back(make_inequality("hats of P missing an edge of G2' = 0", Rational(missing),
                                              Relation::kEqual, Rational(0)));
    st.inequalities.push_back(make_inequality("repeated endpoint pairs in P = 0",
                                              Rational(hats.size() - pairs.size()), Relation::kEqual,
                                              Rational(0)));
    return finish(std::move(st));
  }

  bool stage_g3() {
    StageCertificate st;
    st.stage = "G3";
    st.claim = "an induced G3 over (A3, B3) whose hats are induced, uncrowded, and at least r^9/2^15 |B3|";
    const std::size_t na = a2p_.size();
    BipartiteLayout layout;
    for (std::size_t i = 0; i < na; ++i) layout.left.push_back(static_cast<Vertex>(i));
    for (std::size_t j = 0; j < b_.size(); ++j) layout.right.push_back(static_cast<Vertex>(na + j));
    HatInductionOptions opt;
    opt.r = r_;
    opt.relaxed = params_.relaxed;
    if (params_.relaxed) {
      opt.input_ratio = lemma_hats_input_ratio(r_);
      opt.output_ratio = lemma_hats_output_ratio(r_);
    }
    HatInductionResult res;
    try {
      res = induce_hats_search(g2p_, layout, opt);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kPreconditionFailed) throw;
      return halt(std::move(st), HaltReason::kPreconditionFailed, e.what());
    }
    if (res.status != SearchStatus::kFound) {
      return halt(std::move(st), HaltReason::kSearchExhausted, res.note);
    }
    g3_layout_ = res.layout;
    std::vector<char> in_b3 = membership(g2p_.order(), res.layout.right);
    std::size_t bad_mid = 0;
    for (Vertex a : res.layout.left)
      if (neighbors_in(g2p_, a, in_b3) != 2) ++bad_mid;
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (const Hat& h : res.hats.hats) pairs.insert({h.left, h.right});
    st.inequalities.push_back(make_inequality("|hats(G3)| >= r^9/2^15 |B3|", Rational(res.hats.hats.size()),
                                              Relation::kGreaterEqual,
                                              res.required_ratio * Rational(res.layout.right.size())));
    st.inequalities.push_back(make_inequality("midpoints of G3 without exactly two B3-neighbors = 0",
                                              Rational(bad_mid), Relation::kEqual, Rational(0)));
    st.inequalities.push_back(make_inequality("repeated endpoint pairs in hats(G3) = 0",
                                              Rational(res.hats.hats.size() - pairs.size()), Relation::kEqual,
                                              Rational(0)));
    for (Vertex a : res.layout.left) a3_.push_back(a2p_[a]);
    for (Vertex b : res.layout.right) b3_.push_back(b_[b - na]);
    st.artifacts.push_back({"A3", as_ids(a3_)});
    st.artifacts.push_back({"B3", as_ids(b3_)});
    return finish(std::move(st));
  }

  bool stage_g4() {
    StageCertificate st;
    st.stage = "G4";
    st.claim = "G[B3] has maximum average degree at most r^3 and is r-colorable";
    Graph gb3 = induced_subgraph(g_, b3_);
    MaxAverageDegree mad_b3 = max_average_degree(gb3);
    Coloring col = greedy_coloring(gb3);
    st.inequalities.push_back(make_inequality("mad(G[B3]) <= r^3", mad_b3.value, Relation::kLessEqual,
                                              pow_rational(r_, 3)));
    st.inequalities.push_back(make_inequality("colors(G[B3]) <= r", Rational(color_count(col)),
                                              Relation::kLessEqual, r_));

    // G4 = G3 u G[B3]: vertices 0..|A3|-1 for A3, then B3 in increasing order.
    const std::size_t na2p = a2p_.size();
    const std::size_t na3 = g3_layout_.left.size();
    std::map<Vertex, Vertex> relabel;
    for (std::size_t i = 0; i < na3; ++i) relabel[g3_layout_.left[i]] = static_cast<Vertex>(i);
    for (std::size_t j = 0; j < g3_layout_.right.size(); ++j)
      relabel[g3_layout_.right[j]] = static_cast<Vertex>(na3 + j);
    std::set<Edge> edges;
    for (const Edge& e : g2p_.edges()) {
      auto a = relabel.find(e.u), b = relabel.find(e.v);
      if (a != relabel.end() && b != relabel.end()) edges.insert(make_edge(a->second, b->second));
    }
    for (const Edge& e : gb3.edges())
      edges.insert(make_edge(static_cast<Vertex>(na3 + e.u), static_cast<Vertex>(na3 + e.v)));
    (void)na2p;
    g4_ = Graph(na3 + b3_.size(), std::vector<Edge>(edges.begin(), edges.end()));
    st.note = "|E(G4)| = " + std::to_string(g4_.size());
    return finish(std::move(st));
  }

  bool stage_g5() {
    StageCertificate st;
    st.stage = "G5";
    st.claim = "an induced exactly(k) subdivision of a pattern with average degree at least r";
    const std::size_t na3 = a3_.size();
    BipartiteLayout part;
    for (std::size_t i = 0; i < na3; ++i) part.left.push_back(static_cast<Vertex>(i));
    for (std::size_t j = 0; j < b3_.size(); ++j) part.right.push_back(static_cast<Vertex>(na3 + j));
    FixBranchOptions opt;
    opt.r = r_;
    opt.relaxed = params_.relaxed;
    if (params_.relaxed) {
      opt.hat_ratio = lemma_hats_output_ratio(r_);
      opt.target = r_;
    }
    FixBranchResult res;
    try {
      res = fix_branch_search(g4_, part, opt);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kPreconditionFailed) throw;
      return halt(std::move(st), HaltReason::kPreconditionFailed, e.what());
    }
    if (res.status != SearchStatus::kFound) {
      return halt(std::move(st), HaltReason::kSearchExhausted, res.note);
    }
    SubdivisionWitness w;
    for (Vertex b : res.witness.branch_map) w.branch_map.push_back(b3_[b - na3]);
    const auto& pattern_edges = res.pattern.edges();
    for (std::size_t i = 0; i < pattern_edges.size(); ++i) {
      const std::size_t h_edge = a3_[res.witness.paths[i][1]];
      VertexSet p = paths_[h_edge];
      if (p.front() != w.branch_map[pattern_edges[i].u]) std::reverse(p.begin(), p.end());
      w.paths.push_back(std::move(p));
    }
    auto violations = verify_witness(g_, res.pattern, SubdivisionSpec::exactly(params_.k, Occurrence::kInduced), w);
    st.inequalities.push_back(make_inequality("avg(H5) >= r", average_degree(res.pattern), Relation::kGreaterEqual, r_));
    st.inequalities.push_back(make_inequality("violations of the induced exactly(k) witness = 0",
                                              Rational(violations.size()), Relation::kEqual, Rational(0)));
    st.artifacts.push_back({"branch_vertices", as_ids(w.branch_map)});
    cert_.final_pattern = res.pattern;
    cert_.final_witness = std::move(w);
    return finish(std::move(st));
  }

  const Graph& g_;
  PipelineParams params_;
  SearchLimits limits_;
  PipelineCertificate cert_;
  Rational r_, s_, sk_, mad0_;
  Graph h_;
  SubdivisionWitness phi_;
  std::vector<VertexSet> paths_;  // normalized paths, indexed by H edge
  std::vector<std::size_t> h1_, s_edges_, a2p_, a3_;
  VertexSet b_, b3_;
  Graph g1_, g2_, g2p_, g4_;
  Coloring coloring_;
  BipartiteLayout g3_layout_;
};

}  // namespace detail

/// Runs the constructive argument stage by stage on G, starting from a seed
/// pattern H with a (<=k)-subdivision in G (the nabla_k maximizer when no seed
/// is given). Every stage records its inequalities with exact sides; the run
/// stops at the first stage that fails.
inline PipelineCertificate run_main1_pipeline(
    const Graph& g, const PipelineParams& params,
    const std::optional<std::pair<Graph, SubdivisionWitness>>& seed = std::nullopt,
    const SearchLimits& limits = default_limits()) {
  return detail::PipelineRun(g, params, limits).run(seed);
}

// ---------------------------------------------------------------------------

enum class Tristate { kFalse, kTrue, kUnknown };

inline std::string_view to_string(Tristate t) {
  switch (t) {
    case Tristate::kFalse: return "false";
    case Tristate::kTrue: return "true";
    case Tristate::kUnknown: return "unknown";
  }
  return "?";
}

struct LemmaInequalityReport {
  std::size_t k = 0;
  Rational d;
  Rational mad0;                 // exact
  DensityReport nabla;           // lhs
  DensityReport nabla_prev;      // nabla_{k-1}
  DensityReport nabla_exact;     // hypothesis quantity
  Rational lhs;
  Rational rhs;
  Tristate hypothesis_s = Tristate::kUnknown;  // mad(G) <= s
  Tristate hypothesis_r = Tristate::kUnknown;  // nabla_exact_k(G) < r
  Tristate holds = Tristate::kUnknown;         // lhs < rhs

  bool hypotheses_hold() const { return hypothesis_s == Tristate::kTrue && hypothesis_r == Tristate::kTrue; }
  bool applicable() const { return hypothesis_s != Tristate::kFalse && hypothesis_r != Tristate::kFalse; }
};

/// Compares nabla_k(G) against nabla_{k-1}(G) + d_{r,k,s} and records whether
/// the hypotheses mad(G) <= s and nabla_exact_k(G) < r hold. Inexact measure
/// values are treated as lower bounds, with n-1 as the universal upper bound.
inline LemmaInequalityReport verify_lemma_main1_inequality(const Graph& g, std::size_t k, const BigInt& r,
                                                           const BigInt& s, bool relaxed = false,
                                                           const SearchLimits& limits = default_limits()) {
  require(k >= 1, ErrorKind::kInvalidInput, "k must be at least 1");
  LemmaInequalityReport rep;
  rep.k = k;
  rep.d = d_constant(r, k, s, relaxed);
  rep.mad0 = max_average_degree(g).value;
  rep.nabla = nabla_k(g, k, limits);
  rep.nabla_prev = nabla_k(g, k - 1, limits);
  rep.nabla_exact = nabla_exact_k(g, k, limits);
  rep.lhs = rep.nabla.value;
  rep.rhs = rep.nabla_prev.value + rep.d;
  rep.hypothesis_s = rep.mad0 <= Rational(s) ? Tristate::kTrue : Tristate::kFalse;
  if (rep.nabla_exact.value >= Rational(r)) {
    rep.hypothesis_r = Tristate::kFalse;
  } else {
    rep.hypothesis_r = rep.nabla_exact.exact ? Tristate::kTrue : Tristate::kUnknown;
  }
  const Rational upper = g.order() == 0 ? Rational(0) : Rational(g.order() - 1);
  const Rational lhs_hi = rep.nabla.exact ? rep.lhs : upper;
  if (lhs_hi < rep.rhs) {
    rep.holds = Tristate::kTrue;  // rhs only grows if nabla_{k-1} was a lower bound
  } else if (rep.nabla_prev.exact && rep.lhs >= rep.rhs) {
    rep.holds = Tristate::kFalse;
  }
  return rep;
}

}  // namespace tgrad
