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

// Command-line front end: density profiles, subdivision search, the
// constructive pipeline, bound tables, generators, trends and verification.

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tgrad/io/edge_list.hpp"
#include "tgrad/io/json.hpp"
#include "tgrad/tgrad.hpp"

namespace {

using tgrad::io::Json;

struct Common {
  tgrad::SearchLimits limits = tgrad::default_limits();
  std::string output;
};

void emit(const Common& common, const std::string& text) {
  if (common.output.empty()) {
    std::cout << text;
  } else {
    tgrad::io::write_file_atomic(common.output, text);
  }
}

std::string value_text(const tgrad::DensityReport& r) { return tgrad::to_decimal_string(r.value); }

int cmd_density(const Common& common, const std::string& file, std::size_t kmax, const std::string& measure) {
  tgrad::Graph g = tgrad::io::read_edge_list(file);
  std::vector<tgrad::Measure> measures;
  if (measure == "all") {
    measures = {tgrad::Measure::kNabla, tgrad::Measure::kNablaInduced, tgrad::Measure::kNablaExact};
  } else {
    measures = {tgrad::io::measure_from_string(measure)};
  }
  std::ostringstream out;
  out << "k";
  for (auto m : measures) out << ',' << tgrad::to_string(m);
  for (auto m : measures) out << ',' << tgrad::to_string(m) << "_is_exact";
  out << '\n';
  for (std::size_t k = 0; k <= kmax; ++k) {
    std::vector<tgrad::DensityReport> reports;
    for (auto m : measures) reports.push_back(tgrad::density_measure(g, m, k, common.limits));
    out << k;
    for (const auto& r : reports) out << ',' << value_text(r);
    for (const auto& r : reports) out << ',' << (r.exact ? "true" : "false");
    out << '\n';
  }
  emit(common, out.str());
  return 0;
}

tgrad::SubdivisionSpec parse_spec(const std::string& mode, std::size_t k, const std::string& occurrence) {
  tgrad::Occurrence occ = occurrence == "induced" ? tgrad::Occurrence::kInduced : tgrad::Occurrence::kSubgraph;
  if (mode == "atmost") return tgrad::SubdivisionSpec::at_most(k, occ);
  if (mode == "exact") return tgrad::SubdivisionSpec::exactly(k, occ);
  return tgrad::SubdivisionSpec::unbounded(occ);
}

int cmd_find(const Common& common, const std::string& file, const std::string& pattern_file, std::size_t k,
             const std::string& mode, const std::string& occurrence) {
  tgrad::Graph g = tgrad::io::read_edge_list(file);
  tgrad::Graph h = tgrad::io::read_edge_list(pattern_file);
  tgrad::SubdivisionSpec spec = parse_spec(mode, k, occurrence);
  auto w = tgrad::find_subdivision(g, h, spec, common.limits);
  if (!w) {
    emit(common, "none\n");
  } else {
    emit(common, tgrad::io::witness_to_json({h, spec, *w}).dump(2) + "\n");
  }
  return 0;
}

int cmd_pipeline(const Common& common, const std::string& file, std::size_t k, const std::string& r,
                 const std::string& s, bool relaxed, const std::string& seed_pattern,
                 const std::string& seed_witness) {
  tgrad::Graph g = tgrad::io::read_edge_list(file);
  tgrad::PipelineParams params;
  params.k = k;
  params.r = tgrad::parse_bigint(r);
  params.s = tgrad::parse_bigint(s);
  params.relaxed = relaxed;
  std::optional<std::pair<tgrad::Graph, tgrad::SubdivisionWitness>> seed;
  if (!seed_witness.empty()) {
    auto doc = tgrad::io::witness_from_json(tgrad::io::read_json_file(seed_witness));
    seed = std::make_pair(doc.pattern, doc.witness);
  } else if (!seed_pattern.empty()) {
    tgrad::Graph h = tgrad::io::read_edge_list(seed_pattern);
    auto w = tgrad::find_subdivision(g, h, tgrad::SubdivisionSpec::at_most(k), common.limits);
    tgrad::require(w.has_value(), tgrad::ErrorKind::kInvalidInput,
                   "the seed pattern has no (<=k)-subdivision in the graph");
    seed = std::make_pair(h, *w);
  }
  tgrad::PipelineCertificate cert = tgrad::run_main1_pipeline(g, params, seed, common.limits);
  emit(common, tgrad::io::pipeline_to_json(cert).dump(2) + "\n");
  return cert.completed() ? 0 : 2;
}

std::vector<tgrad::BigInt> bigint_list(const Json& j) {
  tgrad::require(j.is_array(), tgrad::ErrorKind::kInvalidInput, "expected a JSON array of integers");
  std::vector<tgrad::BigInt> out;
  for (const auto& v : j) {
    out.push_back(v.is_string() ? tgrad::parse_bigint(v.get<std::string>())
                                : tgrad::parse_bigint(v.dump()));
  }
  return out;
}

Json parse_f(const std::string& f) {
  if (std::filesystem::exists(f)) return tgrad::io::read_json_file(f);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    tgrad::fail(tgrad::ErrorKind::kInvalidInput, std::string("--f is neither a file nor JSON: ") + e.what());
  }
}

int cmd_bounds(const Common& common, const std::string& mode, const std::string& f, std::optional<std::size_t> kmax,
               const std::string& pattern, const std::string& s, const std::string& c, const std::string& d) {
  if (mode == "bexp") {
    auto values = bigint_list(parse_f(f));
    tgrad::require(!values.empty(), tgrad::ErrorKind::kInvalidInput, "f is empty");
    auto table = tgrad::bexp_bound_table(values, kmax.value_or(values.size() - 1));
    emit(common, tgrad::io::bounds_to_json(table).dump(2) + "\n");
    return 0;
  }
  if (mode == "nd") {
    Json j = parse_f(f);
    auto sizes = tgrad::io::detail::get<std::vector<std::size_t>>(j, "sizes");
    std::vector<std::vector<tgrad::BigInt>> rows;
    for (const auto& row : j.at("f")) rows.push_back(bigint_list(row));
    tgrad::require(!rows.empty(), tgrad::ErrorKind::kInvalidInput, "f is empty");
    auto table = tgrad::nd_bound_function(rows, kmax.value_or(rows.size() - 1), sizes);
    emit(common, tgrad::io::bounds_to_json(table).dump(2) + "\n");
    return 0;
  }
  tgrad::require(!pattern.empty(), tgrad::ErrorKind::kInvalidInput, "main1 needs --pattern");
  tgrad::Graph h = tgrad::io::read_edge_list(pattern);
  auto fvals = tgrad::main1_bound_f(h, tgrad::parse_bigint(s), tgrad::parse_rational(c), tgrad::parse_bigint(d),
                                    kmax.value_or(1));
  Json out{{"f", tgrad::io::bounds_to_json(tgrad::main1_f_table(fvals))},
           {"g", tgrad::io::bounds_to_json(tgrad::bexp_bound_table(tgrad::ceil_all(fvals), fvals.size() - 1))}};
  emit(common, out.dump(2) + "\n");
  return 0;
}

struct GenArgs {
  std::string kind;
  std::size_t n = 0, a = 0, b = 0, k = 0, count = 1, s = 1;
  double p = 0.5, noise = 0.0;
  std::uint64_t seed = 1;
  std::string pattern, lengths, witness_out, outdir;
  std::size_t max_attempts = 100'000;
};

std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    tgrad::require(!item.empty() && item.find_first_not_of("0123456789") == std::string::npos,
                   tgrad::ErrorKind::kInvalidSpec, "bad subdivision length '" + item + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

int cmd_gen(const Common& common, const GenArgs& a) {
  using namespace tgrad;
  auto write_graph = [&](const Graph& g) { emit(common, io::serialize_edge_list(g)); };
  if (a.kind == "complete") {
    write_graph(complete_graph(a.n));
  } else if (a.kind == "biclique") {
    write_graph(complete_bipartite_graph(a.a, a.b));
  } else if (a.kind == "cycle") {
    write_graph(cycle_graph(a.n));
  } else if (a.kind == "path") {
    write_graph(path_graph(a.n));
  } else if (a.kind == "subdivision") {
    require(!a.pattern.empty(), ErrorKind::kInvalidSpec, "subdivision needs --pattern");
    Graph h = io::read_edge_list(a.pattern);
    auto lengths = a.lengths.empty() ? std::vector<std::size_t>(h.size(), a.k) : parse_lengths(a.lengths);
    write_graph(subdivide(h, lengths).graph);
  } else if (a.kind == "gnp") {
    write_graph(random_gnp(a.n, a.p, a.seed));
  } else if (a.kind == "bipartite") {
    write_graph(random_bipartite(a.a, a.b, a.p, a.seed));
  } else if (a.kind == "planted") {
    require(!a.pattern.empty(), ErrorKind::kInvalidSpec, "planted needs --pattern");
    Graph h = io::read_edge_list(a.pattern);
    GeneratedSubdivision gen = planted(h, a.k, a.noise, a.seed);
    write_graph(gen.graph);
    Json w = io::witness_to_json({gen.pattern, SubdivisionSpec::at_most(a.k), gen.witness});
    if (a.witness_out.empty()) {
      std::cerr << w.dump() << '\n';
    } else {
      io::write_file_atomic(a.witness_out, w.dump(2) + "\n");
    }
  } else if (a.kind == "family") {
    require(!a.pattern.empty() && !a.outdir.empty(), ErrorKind::kInvalidSpec,
            "family needs --pattern and --outdir");
    Graph h = io::read_edge_list(a.pattern);
    FilteredFamily fam = filtered_family(h, a.s, a.n, a.count, a.seed, a.max_attempts, common.limits);
    std::filesystem::create_directories(a.outdir);
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      std::ostringstream name;
      name << "member_" << std::setw(5) << std::setfill('0') << i << ".el";
      io::write_file_atomic((std::filesystem::path(a.outdir) / name.str()).string(),
                            io::serialize_edge_list(fam.members[i]));
    }
    require(fam.complete, ErrorKind::kBudgetExceeded,
            "rejection sampling gave up after " + std::to_string(fam.attempts) + " attempts with " +
                std::to_string(fam.members.size()) + " member(s)");
  } else {
    fail(ErrorKind::kInvalidSpec, "unknown generator kind '" + a.kind + "'");
  }
  return 0;
}

int cmd_trend(const Common& common, const std::string& dir, std::size_t k, const std::string& measure) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".el") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<tgrad::Graph> family;
  for (const auto& f : files) family.push_back(tgrad::io::read_edge_list(f.string()));
  auto est = tgrad::family_trend(family, k, tgrad::io::measure_from_string(measure), common.limits);
  emit(common, tgrad::io::trend_to_json(est).dump(2) + "\n");
  return 0;
}

int cmd_verify(const Common& common, const std::string& witness, const std::string& graph,
               const std::string& pattern) {
  tgrad::Graph g = tgrad::io::read_edge_list(graph);
  tgrad::Graph h = tgrad::io::read_edge_list(pattern);
  auto doc = tgrad::io::witness_from_json(tgrad::io::read_json_file(witness));
  auto violations = tgrad::verify_witness(g, h, doc.spec, doc.witness);
  emit(common, tgrad::io::violations_to_json(violations).dump(2) + "\n");
  return violations.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tgrad: exact grad measures, subdivision search and certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  std::uint64_t budget = common.limits.node_budget;
  std::size_t workers = common.limits.workers;
  std::size_t exhaustive = common.limits.exhaustive_bound;
  app.add_option("--budget", budget, "search node budget")->check(CLI::PositiveNumber);
  app.add_option("--workers", workers, "worker threads (default: TGRAD_WORKERS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--exhaustive-bound", exhaustive, "largest host order searched exhaustively");
  app.add_option("-o,--output", common.output, "write the primary output to this file");

  std::string file, pattern, mode = "atmost", occurrence = "subgraph", measure = "all";
  std::size_t k = 1, kmax = 1;

  auto* density = app.add_subcommand("density", "CSV profile of the three measures");
  density->add_option("file", file)->required();
  density->add_option("--kmax", kmax)->required();
  density->add_option("--measure", measure)->check(CLI::IsMember({"all", "nabla", "induced", "exact"}));

  auto* find = app.add_subcommand("find", "search for a subdivision of a pattern");
  find->add_option("file", file)->required();
  find->add_option("--pattern", pattern)->required();
  find->add_option("--k", k);
  find->add_option("--mode", mode)->check(CLI::IsMember({"atmost", "exact", "unbounded"}));
  find->add_option("--occurrence", occurrence)->check(CLI::IsMember({"subgraph", "induced"}));

  std::string r = "1", s = "1", seed_pattern, seed_witness;
  bool relaxed = false;
  auto* pipeline = app.add_subcommand("pipeline", "run the staged construction with certificates");
  pipeline->add_option("file", file)->required();
  pipeline->add_option("--k", k)->required();
  pipeline->add_option("--r", r)->required();
  pipeline->add_option("--s", s)->required();
  pipeline->add_flag("--relaxed", relaxed);
  pipeline->add_option("--seed-pattern", seed_pattern);
  pipeline->add_option("--seed-witness", seed_witness);

  std::string bound_mode = "bexp", f, c = "1", d = "1";
  std::optional<std::size_t> bound_kmax;
  auto* bounds = app.add_subcommand("bounds", "bound tables with exact big numbers");
  bounds->add_option("--mode", bound_mode)->check(CLI::IsMember({"bexp", "nd", "main1"}));
  bounds->add_option("--f", f, "JSON (inline or file): bexp: [f0, f1, ...]; nd: {\"sizes\": [...], \"f\": [[...], ...]}");
  bounds->add_option("--kmax", bound_kmax);
  bounds->add_option("--pattern", pattern);
  bounds->add_option("--s", s);
  bounds->add_option("--c", c);
  bounds->add_option("--d", d);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate graphs");
  gen->add_option("--kind", gen_args.kind)
      ->required()
      ->check(CLI::IsMember({"complete", "biclique", "cycle", "path", "subdivision", "gnp", "bipartite", "planted",
                             "family"}));
  gen->add_option("--n", gen_args.n);
  gen->add_option("--a", gen_args.a);
  gen->add_option("--b", gen_args.b);
  gen->add_option("--k", gen_args.k);
  gen->add_option("--s", gen_args.s);
  gen->add_option("--p", gen_args.p);
  gen->add_option("--noise", gen_args.noise);
  gen->add_option("--seed", gen_args.seed);
  gen->add_option("--count", gen_args.count);
  gen->add_option("--pattern", gen_args.pattern);
  gen->add_option("--lengths", gen_args.lengths, "comma-separated lengths in pattern edge order");
  gen->add_option("--witness-out", gen_args.witness_out);
  gen->add_option("--outdir", gen_args.outdir);
  gen->add_option("--max-attempts", gen_args.max_attempts);

  std::string family_dir;
  std::string trend_measure = "nabla";
  auto* trend = app.add_subcommand("trend", "log-log growth estimate over a family directory");
  trend->add_option("--family", family_dir)->required();
  trend->add_option("--k", k)->required();
  trend->add_option("--measure", trend_measure)->check(CLI::IsMember({"nabla", "induced", "exact"}));

  std::string witness, graph;
  auto* verify = app.add_subcommand("verify", "check a witness; exit 0 iff valid");
  verify->add_option("--witness", witness)->required();
  verify->add_option("--graph", graph)->required();
  verify->add_option("--pattern", pattern)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    common.limits.node_budget = budget;
    common.limits.workers = workers;
    common.limits.exhaustive_bound = exhaustive;
    if (*density) return cmd_density(common, file, kmax, measure);
    if (*find) return cmd_find(common, file, pattern, k, mode, occurrence);
    if (*pipeline) return cmd_pipeline(common, file, k, r, s, relaxed, seed_pattern, seed_witness);
    if (*bounds) return cmd_bounds(common, bound_mode, f, bound_kmax, pattern, s, c, d);
    if (*gen) return cmd_gen(common, gen_args);
    if (*trend) return cmd_trend(common, family_dir, k, trend_measure);
    if (*verify) return cmd_verify(common, witness, graph, pattern);
  } catch (const tgrad::Error& e) {
    std::cerr << tgrad::io::error_to_json(e).dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << Json{{"schema", tgrad::io::kErrorSchema}, {"error", "Internal"}, {"message", e.what()}}.dump()
              << '\n';
    return 1;
  }
  return 1;
}
