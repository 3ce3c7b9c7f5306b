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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tgrad/generators.hpp"
#include "tgrad/io/edge_list.hpp"
#include "tgrad/io/json.hpp"
#include "tgrad/tgrad.hpp"

namespace tgrad {
namespace {

TEST(EdgeList, ParseExamples) {
  EXPECT_EQ(io::parse_edge_list("3\n0 1\n1 2"), path_graph(3));
  EXPECT_EQ(io::parse_edge_list("# header\n\n4   # four vertices\n0 1 # an edge\n\n"), Graph(4, {{0, 1}}));
  try {
    io::parse_edge_list("2\n0 0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.reason(), "loop");
  }
  auto line_of = [](const std::string& text) {
    try {
      io::parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("3\n0 1\n# c\n1 0\n"), 4U);
  EXPECT_EQ(line_of("3\n0 3\n"), 2U);
  EXPECT_EQ(line_of("3\n0 x\n"), 2U);
  EXPECT_EQ(line_of("three\n"), 1U);
  EXPECT_EQ(line_of(""), 1U);
}

TEST(EdgeList, RoundTripIsCanonical) {
  Graph g = io::parse_edge_list("5\n4 3\n# x\n2 0\n1 0\n");
  std::string text = io::serialize_edge_list(g);
  EXPECT_EQ(text, "5\n0 1\n0 2\n3 4\n");
  EXPECT_EQ(io::parse_edge_list(text), g);
  EXPECT_EQ(io::serialize_edge_list(io::parse_edge_list(text)), text);
}

TEST(Json, WitnessRoundTrip) {
  GeneratedSubdivision gen = planted(complete_graph(4), 2, 0.1, 7);
  io::WitnessDocument doc{gen.pattern, SubdivisionSpec::at_most(2), gen.witness};
  io::Json j = io::witness_to_json(doc);
  EXPECT_EQ(j["schema"], io::kWitnessSchema);
  EXPECT_EQ(io::witness_from_json(io::Json::parse(j.dump())), doc);
  EXPECT_THROW(io::witness_from_json(io::Json{{"schema", "other/1"}}), Error);
}

TEST(Json, BoundsRoundTripIsLossless) {
  BoundTable t = bexp_bound_table({1, 1}, 1);
  std::string text = io::bounds_to_json(t).dump();
  BoundTable back = io::bounds_from_json(io::Json::parse(text));
  ASSERT_EQ(back.rows.size(), 2U);
  EXPECT_EQ(back.rows[1].value, Rational((BigInt(1) << 270) + 1));
  EXPECT_EQ(io::bounds_to_json(back).dump(), text);
}

TEST(Json, PipelineRoundTrip) {
  Graph g = uniform_subdivision(complete_graph(10), 1);
  PipelineCertificate c = run_main1_pipeline(g, {1, 1, 4, true});
  std::string text = io::pipeline_to_json(c).dump();
  EXPECT_EQ(io::pipeline_to_json(io::pipeline_from_json(io::Json::parse(text))).dump(), text);

  PipelineCertificate halted = run_main1_pipeline(cycle_graph(6), {1, 3, 2, true});
  std::string h = io::pipeline_to_json(halted).dump();
  EXPECT_EQ(io::pipeline_to_json(io::pipeline_from_json(io::Json::parse(h))).dump(), h);
}

TEST(Json, DensityAndTrendRoundTrip) {
  DensityReport r = nabla_induced_k(petersen_graph(), 1);
  std::string text = io::density_to_json(r).dump();
  EXPECT_EQ(io::density_to_json(io::density_from_json(io::Json::parse(text))).dump(), text);

  TrendEstimate t = family_trend({cycle_graph(4), cycle_graph(5), cycle_graph(6)}, 1);
  std::string tt = io::trend_to_json(t).dump();
  EXPECT_EQ(io::trend_to_json(io::trend_from_json(io::Json::parse(tt))).dump(), tt);
}

TEST(Generators, SubdivisionExamples) {
  Graph c6 = subdivide(complete_graph(3), {1, 1, 1}).graph;
  EXPECT_EQ(c6.order(), 6U);
  EXPECT_EQ(c6.size(), 6U);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(c6.degree(v), 2U);
  EXPECT_TRUE(find_subdivision(cycle_graph(6), c6, SubdivisionSpec::at_most(0)));
  Graph s4 = uniform_subdivision(complete_graph(4), 1);
  EXPECT_EQ(s4.order(), 10U);
  EXPECT_EQ(s4.size(), 12U);
  EXPECT_THROW(subdivide(complete_graph(3), {1, 1}), Error);
}

TEST(Generators, DeterministicForFixedSeed) {
  EXPECT_EQ(random_gnp(20, 0.3, 5), random_gnp(20, 0.3, 5));
  EXPECT_NE(random_gnp(20, 0.3, 5), random_gnp(20, 0.3, 6));
  EXPECT_EQ(random_bipartite(5, 6, 0.5, 1), random_bipartite(5, 6, 0.5, 1));
  auto a = planted(petersen_graph(), 2, 0.05, 3);
  auto b = planted(petersen_graph(), 2, 0.05, 3);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_THROW(random_gnp(5, 1.5, 0), Error);
}

TEST(Generators, PlantedWitnessesVerify) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph h = random_gnp(3 + seed % 4, 0.6, seed);
    const std::size_t k = seed % 4;
    auto gen = planted(h, k, 0.1, seed);
    ASSERT_TRUE(verify_witness(gen.graph, h, SubdivisionSpec::at_most(k), gen.witness).empty());
    auto exact = planted(h, k, 0.0, seed, true);
    ASSERT_TRUE(verify_witness(exact.graph, h, SubdivisionSpec::exactly(k, Occurrence::kInduced), exact.witness).empty());
  }
}

TEST(Generators, FilteredFamilyMembersAreInClass) {
  Graph k4 = complete_graph(4);
  FilteredFamily fam = filtered_family(k4, 3, 7, 5, 11);
  ASSERT_TRUE(fam.complete);
  ASSERT_EQ(fam.members.size(), 5U);
  for (const Graph& g : fam.members) {
    auto rep = forbidden_pattern_check(g, k4, 3);
    EXPECT_FALSE(rep.has_clique);
    EXPECT_FALSE(rep.has_biclique_induced);
    EXPECT_FALSE(rep.has_induced_subdivision);
  }
  FilteredFamily capped = filtered_family(k4, 1, 5, 1, 0, 3);
  EXPECT_FALSE(capped.complete);
  EXPECT_EQ(capped.attempts, 3U);
}

}  // namespace
}  // namespace tgrad
