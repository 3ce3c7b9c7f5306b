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

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tgrad/densest.hpp"
#include "tgrad/density.hpp"
#include "tgrad/generators.hpp"
#include "tgrad/trend.hpp"

namespace tgrad {
namespace {

constexpr Measure kAll[] = {Measure::kNabla, Measure::kNablaInduced, Measure::kNablaExact};

void expect_report_consistent(const Graph& g, const DensityReport& r) {
  if (r.witness_pattern.order() == 0) {
    EXPECT_EQ(r.value, 0);
    return;
  }
  EXPECT_EQ(average_degree(r.witness_pattern), r.value);
  EXPECT_TRUE(verify_witness(g, r.witness_pattern, spec_for(r.measure, r.k), r.witness).empty());
}

TEST(Density, Examples) {
  EXPECT_EQ(nabla_k(cycle_graph(6), 1).value, Rational(2));
  Graph s4 = uniform_subdivision(complete_graph(4), 1);
  DensityReport e = nabla_exact_k(s4, 1);
  EXPECT_EQ(e.value, Rational(3));
  EXPECT_EQ(e.witness_pattern.order(), 4U);
  EXPECT_EQ(e.witness_pattern.size(), 6U);
  EXPECT_EQ(nabla_exact_k(complete_graph(3), 1).value, Rational(0));
}

TEST(Density, ProfileExamples) {
  auto k4 = density_profile(complete_graph(4), 1);
  ASSERT_EQ(k4.size(), 2U);
  EXPECT_EQ(k4[0].nabla.value, 3);
  EXPECT_EQ(k4[0].induced.value, 3);
  EXPECT_EQ(k4[0].exact.value, 3);
  EXPECT_EQ(k4[1].nabla.value, 3);
  EXPECT_EQ(k4[1].induced.value, 3);
  // K_4 has no induced path on three vertices.
  EXPECT_EQ(k4[1].exact.value, 0);
  EXPECT_EQ(k4[1].exact.value, testing::naive_density(complete_graph(4), spec_for(Measure::kNablaExact, 1)));

  for (const auto& row : density_profile(edgeless_graph(4), 2)) {
    EXPECT_EQ(row.nabla.value, 0);
    EXPECT_EQ(row.induced.value, 0);
    EXPECT_EQ(row.exact.value, 0);
  }
  auto c6 = density_profile(cycle_graph(6), 1);
  EXPECT_EQ(c6[0].nabla.value, 2);
  EXPECT_EQ(c6[0].exact.value, 2);
  EXPECT_EQ(c6[1].nabla.value, 2);
  EXPECT_EQ(c6[1].induced.value, 2);
  EXPECT_LE(c6[1].exact.value, 2);
}

TEST(Density, AgreesWithNaiveOracle) {
  for (const Graph& g : testing::all_graphs(6)) {
    for (std::size_t k = 0; k <= 2; ++k) {
      for (Measure m : kAll) {
        DensityReport r = density_measure(g, m, k);
        ASSERT_TRUE(r.exact);
        ASSERT_EQ(r.value, testing::naive_density(g, spec_for(m, k)))
            << "n=" << g.order() << " m=" << g.size() << " k=" << k << " " << to_string(m);
        expect_report_consistent(g, r);
      }
    }
  }
}

TEST(Density, ZeroDepthIsMaxAverageDegree) {
  for (const Graph& g : testing::connected_graphs(7)) {
    Rational mad = max_average_degree(g).value;
    ASSERT_EQ(nabla_k(g, 0).value, mad);
    ASSERT_EQ(nabla_induced_k(g, 0).value, mad);
    ASSERT_EQ(nabla_exact_k(g, 0).value, mad);
  }
}

TEST(Density, MonotoneInDepthForNablaAndInduced) {
  for (const Graph& g : testing::all_graphs(6)) {
    for (std::size_t k = 1; k <= 2; ++k) {
      ASSERT_GE(nabla_k(g, k).value, nabla_k(g, k - 1).value);
      ASSERT_GE(nabla_induced_k(g, k).value, nabla_induced_k(g, k - 1).value);
    }
  }
}

TEST(Density, DeterministicAcrossWorkerCounts) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = random_gnp(11, 0.35, seed);
    for (Measure m : kAll) {
      SearchLimits one, four;
      four.workers = 4;
      DensityReport a = density_measure(g, m, 1, one);
      DensityReport b = density_measure(g, m, 1, four);
      ASSERT_EQ(a.value, b.value);
      ASSERT_EQ(a.witness, b.witness);
      ASSERT_EQ(a.witness_pattern, b.witness_pattern);
    }
  }
}

TEST(Density, HeuristicModeBeyondExhaustiveBound) {
  Graph g = uniform_subdivision(complete_graph(10), 1);
  DensityReport r = nabla_k(g, 1);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.value, 9);
  expect_report_consistent(g, r);
  DensityReport e = nabla_exact_k(g, 1);
  EXPECT_GE(e.value, 9);
  expect_report_consistent(g, e);
}

TEST(Trend, Examples) {
  std::vector<Graph> cycles = {cycle_graph(4), cycle_graph(6), cycle_graph(8), cycle_graph(10)};
  TrendEstimate c = family_trend(cycles, 1);
  for (const auto& p : c.points) EXPECT_EQ(p.value, 2);
  EXPECT_NEAR(c.slope, 0.0, 1e-12);

  std::vector<Graph> cliques = {complete_graph(2), complete_graph(3), complete_graph(4), complete_graph(5)};
  TrendEstimate k = family_trend(cliques, 0);
  for (const auto& p : k.points) EXPECT_EQ(p.value, Rational(p.n - 1));
  EXPECT_GT(k.slope, 1.0);

  std::vector<Graph> empty = {edgeless_graph(3), edgeless_graph(4), edgeless_graph(5)};
  TrendEstimate e = family_trend(empty, 1);
  for (const auto& p : e.points) EXPECT_EQ(p.value, 0);
  EXPECT_EQ(e.slope, 0.0);

  EXPECT_THROW(family_trend({cycle_graph(4), cycle_graph(5)}, 1), Error);
}

}  // namespace
}  // namespace tgrad
