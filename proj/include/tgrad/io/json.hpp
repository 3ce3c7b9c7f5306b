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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tgrad/bounds.hpp"
#include "tgrad/density.hpp"
#include "tgrad/errors.hpp"
#include "tgrad/graph.hpp"
#include "tgrad/numeric.hpp"
#include "tgrad/pipeline.hpp"
#include "tgrad/trend.hpp"
#include "tgrad/witness.hpp"

namespace tgrad::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kWitnessSchema = "tgrad.witness/1";
inline constexpr const char* kDensitySchema = "tgrad.density/1";
inline constexpr const char* kPipelineSchema = "tgrad.pipeline/1";
inline constexpr const char* kBoundsSchema = "tgrad.bounds/1";
inline constexpr const char* kTrendSchema = "tgrad.trend/1";
inline constexpr const char* kViolationsSchema = "tgrad.violations/1";
inline constexpr const char* kErrorSchema = "tgrad.error/1";

namespace detail {

inline void expect_schema(const Json& j, const char* schema) {
  require(j.is_object() && j.contains("schema") && j.at("schema") == schema, ErrorKind::kInvalidInput,
          std::string("expected a JSON document with schema ") + schema);
}

template <class T>
T get(const Json& j, const char* key) {
  require(j.contains(key), ErrorKind::kInvalidInput, std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kInvalidInput, std::string("bad JSON field '") + key + "': " + e.what());
  }
}

inline Rational get_rational(const Json& j, const char* key) { return parse_rational(get<std::string>(j, key)); }
inline BigInt get_bigint(const Json& j, const char* key) { return parse_bigint(get<std::string>(j, key)); }

}  // namespace detail

// ---- graphs embedded in JSON ----------------------------------------------

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"vertices", g.order()}, {"edges", edges}};
}

inline Graph graph_from_json(const Json& j) {
  const auto n = detail::get<std::size_t>(j, "vertices");
  std::vector<Edge> edges;
  for (const auto& e : detail::get<std::vector<std::vector<std::uint64_t>>>(j, "edges")) {
    require(e.size() == 2, ErrorKind::kInvalidInput, "edge entries must be pairs");
    require(e[0] < n && e[1] < n, ErrorKind::kInvalidInput, "edge endpoint out of range");
    edges.push_back({static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1])});
  }
  return Graph(n, edges);
}

// ---- subdivision spec and witness -----------------------------------------

inline Json spec_to_json(const SubdivisionSpec& spec) {
  Json j{{"depth", to_string(spec.depth_mode)},
         {"occurrence", spec.induced() ? "induced" : "subgraph"}};
  if (spec.depth_mode != DepthMode::kUnbounded) j["k"] = spec.k;
  return j;
}

inline SubdivisionSpec spec_from_json(const Json& j) {
  const auto depth = detail::get<std::string>(j, "depth");
  const auto occ = detail::get<std::string>(j, "occurrence");
  require(occ == "induced" || occ == "subgraph", ErrorKind::kInvalidInput, "bad occurrence '" + occ + "'");
  Occurrence o = occ == "induced" ? Occurrence::kInduced : Occurrence::kSubgraph;
  if (depth == "unbounded") return SubdivisionSpec::unbounded(o);
  const auto k = detail::get<std::size_t>(j, "k");
  if (depth == "at_most") return SubdivisionSpec::at_most(k, o);
  if (depth == "exactly") return SubdivisionSpec::exactly(k, o);
  fail(ErrorKind::kInvalidInput, "bad depth mode '" + depth + "'");
}

struct WitnessDocument {
  Graph pattern;
  SubdivisionSpec spec;
  SubdivisionWitness witness;

  bool operator==(const WitnessDocument&) const = default;
};

inline Json witness_body(const Graph& pattern, const SubdivisionWitness& w) {
  Json paths = Json::array();
  for (const auto& p : w.paths) paths.push_back(p);
  return Json{{"pattern_vertices", pattern.order()},
              {"pattern_edges", graph_to_json(pattern)["edges"]},
              {"branch_map", w.branch_map},
              {"paths", paths}};
}

inline Json witness_to_json(const WitnessDocument& doc) {
  Json j{{"schema", kWitnessSchema}};
  j.update(witness_body(doc.pattern, doc.witness));
  j["spec"] = spec_to_json(doc.spec);
  return j;
}

inline std::pair<Graph, SubdivisionWitness> witness_body_from_json(const Json& j) {
  Json g{{"vertices", detail::get<std::size_t>(j, "pattern_vertices")}, {"edges", j.at("pattern_edges")}};
  SubdivisionWitness w;
  for (auto v : detail::get<std::vector<std::uint64_t>>(j, "branch_map")) w.branch_map.push_back(static_cast<Vertex>(v));
  for (const auto& p : detail::get<std::vector<std::vector<std::uint64_t>>>(j, "paths")) {
    VertexSet path;
    for (auto v : p) path.push_back(static_cast<Vertex>(v));
    w.paths.push_back(std::move(path));
  }
  return {graph_from_json(g), std::move(w)};
}

inline WitnessDocument witness_from_json(const Json& j) {
  detail::expect_schema(j, kWitnessSchema);
  auto [pattern, w] = witness_body_from_json(j);
  return {std::move(pattern), spec_from_json(j.at("spec")), std::move(w)};
}

inline Json violations_to_json(const std::vector<Violation>& vs) {
  Json list = Json::array();
  for (const auto& v : vs) list.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
  return Json{{"schema", kViolationsSchema}, {"valid", vs.empty()}, {"violations", list}};
}

// ---- density --------------------------------------------------------------

inline Measure measure_from_string(const std::string& s) {
  if (s == "nabla") return Measure::kNabla;
  if (s == "nabla_induced" || s == "induced") return Measure::kNablaInduced;
  if (s == "nabla_exact" || s == "exact") return Measure::kNablaExact;
  fail(ErrorKind::kInvalidInput, "unknown measure '" + s + "'");
}

inline Json density_to_json(const DensityReport& r) {
  Json j{{"schema", kDensitySchema},
         {"k", r.k},
         {"measure", to_string(r.measure)},
         {"value", to_decimal_string(r.value)},
         {"exact", r.exact}};
  j["witness"] = witness_body(r.witness_pattern, r.witness);
  return j;
}

inline DensityReport density_from_json(const Json& j) {
  detail::expect_schema(j, kDensitySchema);
  DensityReport r;
  r.k = detail::get<std::size_t>(j, "k");
  r.measure = measure_from_string(detail::get<std::string>(j, "measure"));
  r.value = detail::get_rational(j, "value");
  r.exact = detail::get<bool>(j, "exact");
  auto [pattern, w] = witness_body_from_json(j.at("witness"));
  r.witness_pattern = std::move(pattern);
  r.witness = std::move(w);
  return r;
}

// ---- bound tables ---------------------------------------------------------

inline Json bounds_to_json(const BoundTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r{{"k", row.k}};
    if (row.n) r["n"] = *row.n;
    r["value"] = to_decimal_string(row.value);
    r["provenance"] = row.provenance;
    rows.push_back(std::move(r));
  }
  return Json{{"schema", kBoundsSchema}, {"kind", t.kind}, {"rows", rows}};
}

inline BoundTable bounds_from_json(const Json& j) {
  detail::expect_schema(j, kBoundsSchema);
  BoundTable t;
  t.kind = detail::get<std::string>(j, "kind");
  for (const auto& r : j.at("rows")) {
    BoundRow row;
    row.k = detail::get<std::size_t>(r, "k");
    if (r.contains("n")) row.n = detail::get<std::size_t>(r, "n");
    row.value = detail::get_rational(r, "value");
    row.provenance = detail::get<std::string>(r, "provenance");
    t.rows.push_back(std::move(row));
  }
  return t;
}

// ---- trend ----------------------------------------------------------------

inline Json trend_to_json(const TrendEstimate& t) {
  Json points = Json::array();
  for (const auto& p : t.points)
    points.push_back({{"n", p.n}, {"value", to_decimal_string(p.value)}, {"exact", p.exact}});
  return Json{{"schema", kTrendSchema}, {"k", t.k},           {"measure", to_string(t.measure)},
              {"points", points},       {"fitted_points", t.fitted_points},
              {"slope", t.slope},       {"hint", t.hint}};
}

inline TrendEstimate trend_from_json(const Json& j) {
  detail::expect_schema(j, kTrendSchema);
  TrendEstimate t;
  t.k = detail::get<std::size_t>(j, "k");
  t.measure = measure_from_string(detail::get<std::string>(j, "measure"));
  for (const auto& p : j.at("points"))
    t.points.push_back({detail::get<std::size_t>(p, "n"), detail::get_rational(p, "value"), detail::get<bool>(p, "exact")});
  t.fitted_points = detail::get<std::size_t>(j, "fitted_points");
  t.slope = detail::get<double>(j, "slope");
  t.hint = detail::get<std::string>(j, "hint");
  return t;
}

// ---- pipeline certificates ------------------------------------------------

inline Relation relation_from_string(const std::string& s) {
  if (s == "<") return Relation::kLess;
  if (s == "<=") return Relation::kLessEqual;
  if (s == ">=") return Relation::kGreaterEqual;
  if (s == "=") return Relation::kEqual;
  fail(ErrorKind::kInvalidInput, "unknown relation '" + s + "'");
}

inline Json pipeline_to_json(const PipelineCertificate& c) {
  Json stages = Json::array();
  for (const auto& st : c.stages) {
    Json ineqs = Json::array();
    for (const auto& q : st.inequalities) {
      ineqs.push_back({{"name", q.name},
                       {"lhs", to_decimal_string(q.lhs)},
                       {"relation", to_string(q.relation)},
                       {"rhs", to_decimal_string(q.rhs)},
                       {"holds", q.holds},
                       {"note", q.note}});
    }
    Json artifacts = Json::array();
    for (const auto& [name, ids] : st.artifacts) artifacts.push_back({{"name", name}, {"ids", ids}});
    stages.push_back({{"stage", st.stage},
                      {"claim", st.claim},
                      {"pass", st.pass},
                      {"inequalities", ineqs},
                      {"artifacts", artifacts},
                      {"note", st.note}});
  }
  Json j{{"schema", kPipelineSchema},
         {"params",
          {{"k", c.params.k},
           {"r", to_decimal_string(c.params.r)},
           {"s", to_decimal_string(c.params.s)},
           {"relaxed", c.params.relaxed}}},
         {"effective_r", to_decimal_string(c.effective_r)},
         {"d", to_decimal_string(c.d)},
         {"seed", witness_body(c.seed_pattern, c.seed_witness)},
         {"seed_from_search", c.seed_from_search},
         {"stages", stages},
         {"outcome", to_string(c.outcome)},
         {"halted_stage", c.halted_stage},
         {"halt_reason", to_string(c.halt_reason)},
         {"halt_detail", c.halt_detail}};
  if (c.final_pattern && c.final_witness) {
    j["final"] = witness_body(*c.final_pattern, *c.final_witness);
  } else {
    j["final"] = nullptr;
  }
  return j;
}

inline PipelineCertificate pipeline_from_json(const Json& j) {
  detail::expect_schema(j, kPipelineSchema);
  PipelineCertificate c;
  const Json& p = j.at("params");
  c.params.k = detail::get<std::size_t>(p, "k");
  c.params.r = detail::get_bigint(p, "r");
  c.params.s = detail::get_bigint(p, "s");
  c.params.relaxed = detail::get<bool>(p, "relaxed");
  c.effective_r = detail::get_bigint(j, "effective_r");
  c.d = detail::get_rational(j, "d");
  std::tie(c.seed_pattern, c.seed_witness) = witness_body_from_json(j.at("seed"));
  c.seed_from_search = detail::get<bool>(j, "seed_from_search");
  for (const auto& s : j.at("stages")) {
    StageCertificate st;
    st.stage = detail::get<std::string>(s, "stage");
    st.claim = detail::get<std::string>(s, "claim");
    st.pass = detail::get<bool>(s, "pass");
    for (const auto& q : s.at("inequalities")) {
      Inequality in;
      in.name = detail::get<std::string>(q, "name");
      in.lhs = detail::get_rational(q, "lhs");
      in.relation = relation_from_string(detail::get<std::string>(q, "relation"));
      in.rhs = detail::get_rational(q, "rhs");
      in.holds = detail::get<bool>(q, "holds");
      in.note = detail::get<std::string>(q, "note");
      st.inequalities.push_back(std::move(in));
    }
    for (const auto& a : s.at("artifacts"))
      st.artifacts.push_back({detail::get<std::string>(a, "name"), detail::get<std::vector<std::uint64_t>>(a, "ids")});
    st.note = detail::get<std::string>(s, "note");
    c.stages.push_back(std::move(st));
  }
  const auto outcome = detail::get<std::string>(j, "outcome");
  c.outcome = outcome == "completed" ? PipelineOutcome::kCompleted : PipelineOutcome::kHalted;
  c.halted_stage = detail::get<std::string>(j, "halted_stage");
  const auto reason = detail::get<std::string>(j, "halt_reason");
  for (HaltReason r : {HaltReason::kNone, HaltReason::kInequalityFailed, HaltReason::kPreconditionFailed,
                       HaltReason::kSearchExhausted})
    if (reason == to_string(r)) c.halt_reason = r;
  c.halt_detail = detail::get<std::string>(j, "halt_detail");
  if (!j.at("final").is_null()) {
    auto [pattern, w] = witness_body_from_json(j.at("final"));
    c.final_pattern = std::move(pattern);
    c.final_witness = std::move(w);
  }
  return c;
}

// ---- errors and files -----------------------------------------------------

inline Json error_to_json(const Error& e) {
  Json j{{"schema", kErrorSchema}, {"error", to_string(e.kind())}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["line"] = pe->line();
  return j;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::kInvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::kInvalidInput, path + ": " + e.what());
  }
}

/// Writes through a temporary file in the same directory, then renames.
inline void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), ErrorKind::kInvalidInput, "cannot write " + tmp.string());
    out << content;
    out.flush();
    require(static_cast<bool>(out), ErrorKind::kInvalidInput, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace tgrad::io
