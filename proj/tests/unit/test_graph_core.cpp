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
#include "tgrad/coloring.hpp"
#include "tgrad/densest.hpp"
#include "tgrad/generators.hpp"
#include "tgrad/graph.hpp"

namespace tgrad {
namespace {

// Maximum of 2|E(G[S])|/|S| over all nonempty S, by enumeration.
Rational mad_by_enumeration(const Graph& g) {
  Rational best = 0;
  const std::size_t n = g.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t edges = 0, size = std::popcount(mask);
    for (const Edge& e : g.edges())
      if ((mask >> e.u & 1U) && (mask >> e.v & 1U)) ++edges;
    best = std::max(best, Rational(2 * edges, size));
  }
  return best;
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(2, {{0, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(2, {{0, 2}}), Error);
}

TEST(Graph, CanonicalEdgeOrderAndEquality) {
  Graph a(3, {{2, 1}, {1, 0}});
  Graph b(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.edges().size(), 2U);
  EXPECT_EQ(a.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(a.edges()[1], (Edge{1, 2}));
  EXPECT_NE(a, Graph(4, {{0, 1}, {1, 2}}));
}

TEST(Graph, AdjacencyAndDegrees) {
  Graph g = petersen_graph();
  EXPECT_EQ(g.order(), 10U);
  EXPECT_EQ(g.size(), 15U);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3U);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Graph, LayoutValidation) {
  Graph g = complete_bipartite_graph(2, 2);
  EXPECT_NO_THROW(validate_layout(g, {{0, 1}, {2, 3}}, true));
  EXPECT_THROW(validate_layout(g, {{0, 2}, {1, 3}}, true), Error);
  EXPECT_THROW(validate_layout(g, {{0, 1}, {1, 2}}, false), Error);
}

TEST(AverageDegree, Examples) {
  EXPECT_EQ(average_degree(complete_graph(4)), Rational(3));
  EXPECT_EQ(average_degree(path_graph(3)), Rational(4, 3));
  EXPECT_EQ(average_degree(edgeless_graph(5)), Rational(0));
  EXPECT_THROW(average_degree(Graph(0)), Error);
}

TEST(MaxAverageDegree, Examples) {
  auto c5 = max_average_degree(cycle_graph(5));
  EXPECT_EQ(c5.value, Rational(2));
  EXPECT_EQ(c5.witness, all_vertices(cycle_graph(5)));

  Graph k4_pendant(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  auto r = max_average_degree(k4_pendant);
  EXPECT_EQ(r.value, Rational(3));
  EXPECT_EQ(r.witness, (VertexSet{0, 1, 2, 3}));

  EXPECT_EQ(max_average_degree(complete_bipartite_graph(3, 3)).value, Rational(3));
}

TEST(MaxAverageDegree, MatchesEnumerationOnCorpus) {
  for (const Graph& g : testing::all_graphs(7)) {
    auto r = max_average_degree(g);
    ASSERT_EQ(r.value, mad_by_enumeration(g)) << g.order() << " " << g.size();
    ASSERT_EQ(average_degree(r.witness.size(), count_edges_within(g, r.witness)), r.value);
    ASSERT_LE(average_degree(g), r.value);
  }
}

TEST(MaxAverageDegree, MatchesEnumerationUpToSixteenVertices) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 8 + seed % 9;
    Graph g = random_gnp(n, 0.15 + 0.02 * static_cast<double>(seed % 20), seed);
    auto r = max_average_degree(g);
    ASSERT_EQ(r.value, mad_by_enumeration(g)) << "seed " << seed;
    ASSERT_EQ(average_degree(r.witness.size(), count_edges_within(g, r.witness)), r.value);
  }
}

TEST(Coloring, Examples) {
  Coloring c5 = greedy_coloring(cycle_graph(5));
  EXPECT_TRUE(is_proper_coloring(cycle_graph(5), c5));
  EXPECT_LE(color_count(c5), 3U);
  EXPECT_EQ(color_count(greedy_coloring(complete_graph(4))), 4U);
  EXPECT_EQ(color_count(greedy_coloring(edgeless_graph(4))), 1U);
}

TEST(Coloring, BoundedByMadOnCorpus) {
  for (const Graph& g : testing::all_graphs(7)) {
    Coloring c = greedy_coloring(g);
    ASSERT_TRUE(is_proper_coloring(g, c));
    ASSERT_LE(Rational(color_count(c)), Rational(floor_rational(max_average_degree(g).value)) + 1);
    VertexSet ind = independent_set_from_coloring(g);
    ASSERT_TRUE(is_independent(g, ind));
    ASSERT_GE(ind.size() * color_count(c), g.order());
  }
}

TEST(Coloring, IndependentSetExamples) {
  EXPECT_EQ(independent_set_from_coloring(complete_graph(4)).size(), 1U);
  VertexSet c6 = independent_set_from_coloring(cycle_graph(6));
  EXPECT_EQ(c6.size(), 3U);
  EXPECT_TRUE(is_independent(cycle_graph(6), c6));
  EXPECT_EQ(independent_set_from_coloring(edgeless_graph(5)).size(), 5U);
}

TEST(Coloring, ExactColorability) {
  EXPECT_FALSE(colorable_with(cycle_graph(5), 2));
  EXPECT_TRUE(colorable_with(cycle_graph(5), 3));
  EXPECT_TRUE(colorable_with(petersen_graph(), 3));
  EXPECT_FALSE(colorable_with(complete_graph(4), 3));
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(complete_graph(4), {0, 2, 3}), complete_graph(3));
  EXPECT_EQ(induced_subgraph(cycle_graph(6), {0, 2, 4}).size(), 0U);
  Graph p = petersen_graph();
  EXPECT_EQ(induced_subgraph(p, all_vertices(p)), p);
}

TEST(Degeneracy, OrderIsAPermutationWithCorrectDegeneracy) {
  for (const Graph& g : testing::all_graphs(6)) {
    DegeneracyOrder d = degeneracy_order(g);
    VertexSet sorted = d.order;
    std::sort(sorted.begin(), sorted.end());
    ASSERT_EQ(sorted, all_vertices(g));
    // Each vertex has at most `degeneracy` neighbors later in the order.
    std::vector<std::size_t> pos(g.order());
    for (std::size_t i = 0; i < d.order.size(); ++i) pos[d.order[i]] = i;
    for (Vertex v = 0; v < g.order(); ++v) {
      std::size_t later = 0;
      for (Vertex w : g.neighbors(v)) later += pos[w] > pos[v];
      ASSERT_LE(later, d.degeneracy);
    }
  }
}

}  // namespace
}  // namespace tgrad
