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

#include "tgrad/generators.hpp"
#include "tgrad/hats.hpp"

namespace tgrad {
namespace {

// Brute-force maximum uncrowded hat set size over all subsets of hats.
std::size_t max_uncrowded_by_enumeration(const std::vector<Hat>& all) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<Hat> pick;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1U) pick.push_back(all[i]);
    if (hats_uncrowded(pick)) best = std::max(best, pick.size());
  }
  return best;
}

void expect_flags_recomputable(const Graph& g, const HatSet& s) {
  EXPECT_EQ(s.uncrowded, hats_uncrowded(s.hats));
  EXPECT_EQ(s.induced, hats_induced(g, s.layout, s.hats));
}

TEST(Hats, EnumerationExamples) {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(enumerate_hats(star, {{0}, {1, 2, 3}}).size(), 3U);
  Graph matching(4, {{0, 2}, {1, 3}});
  EXPECT_TRUE(enumerate_hats(matching, {{0, 1}, {2, 3}}).empty());
  Graph one(3, {{0, 1}, {0, 2}});
  auto hats = enumerate_hats(one, {{0}, {1, 2}});
  ASSERT_EQ(hats.size(), 1U);
  EXPECT_EQ(hats[0], make_hat(0, 1, 2));
}

TEST(Hats, MaxUncrowdedExamples) {
  Graph two(6, {{0, 2}, {0, 3}, {1, 4}, {1, 5}});
  HatSet a = max_uncrowded_hatset(two, {{0, 1}, {2, 3, 4, 5}});
  EXPECT_EQ(a.hats.size(), 2U);
  expect_flags_recomputable(two, a);

  Graph same(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_EQ(max_uncrowded_hatset(same, {{0, 1}, {2, 3}}).hats.size(), 1U);
}

TEST(Hats, MaxUncrowdedMatchesEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_bipartite(4, 4, 0.5, seed);
    BipartiteLayout layout{{0, 1, 2, 3}, {4, 5, 6, 7}};
    auto all = enumerate_hats(g, layout);
    if (all.size() > 18) continue;
    HatSet best = max_uncrowded_hatset(g, layout);
    ASSERT_TRUE(best.uncrowded);
    ASSERT_EQ(best.hats.size(), max_uncrowded_by_enumeration(all)) << "seed " << seed;
    expect_flags_recomputable(g, best);
  }
}

TEST(Hats, InduceSearchFixedPoint) {
  // Three midpoints over a triangle of endpoint pairs: already induced and uncrowded.
  Graph g(6, {{0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 3}, {2, 5}});
  HatInductionOptions opt;
  opt.relaxed = true;
  opt.output_ratio = Rational(1);
  auto res = induce_hats_search(g, {{0, 1, 2}, {3, 4, 5}}, opt);
  ASSERT_EQ(res.status, SearchStatus::kFound);
  EXPECT_EQ(res.layout.left, (VertexSet{0, 1, 2}));
  EXPECT_EQ(res.layout.right, (VertexSet{3, 4, 5}));
  EXPECT_EQ(res.hats.hats.size(), 3U);
  EXPECT_TRUE(res.hats.induced);
  EXPECT_TRUE(res.hats.uncrowded);
}

TEST(Hats, InduceSearchDropsCrowdingMidpoint) {
  // As above plus a midpoint 6 adjacent to all of B.
  Graph g(7, {{0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {6, 3}, {6, 4}, {6, 5}});
  HatInductionOptions opt;
  opt.relaxed = true;
  opt.output_ratio = Rational(1);
  auto res = induce_hats_search(g, {{0, 1, 2, 6}, {3, 4, 5}}, opt);
  ASSERT_EQ(res.status, SearchStatus::kFound);
  EXPECT_EQ(res.layout.left, (VertexSet{0, 1, 2}));
  EXPECT_TRUE(res.hats.induced);
  EXPECT_TRUE(res.hats.uncrowded);
  EXPECT_GE(Rational(res.hats.hats.size()), opt.output_ratio.value() * Rational(res.layout.right.size()));
}

TEST(Hats, InduceSearchOutputContract) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_bipartite(6, 5, 0.45, seed);
    BipartiteLayout layout{{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}};
    HatInductionOptions opt;
    opt.r = 2;
    opt.relaxed = true;
    opt.output_ratio = Rational(1, 2);
    auto res = induce_hats_search(g, layout, opt);
    if (res.status != SearchStatus::kFound) continue;
    ASSERT_FALSE(res.layout.right.empty());
    std::vector<char> in_b = membership(g.order(), res.layout.right);
    for (Vertex a : res.layout.left) ASSERT_EQ(neighbors_in(g, a, in_b), 2U);
    ASSERT_TRUE(res.hats.uncrowded);
    ASSERT_TRUE(res.hats.induced);
    ASSERT_GE(Rational(res.hats.hats.size()), Rational(1, 2) * Rational(res.layout.right.size()));
    expect_flags_recomputable(g, res.hats);
  }
}

TEST(Hats, InduceSearchPreconditions) {
  HatInductionOptions opt;
  opt.relaxed = true;
  try {
    induce_hats_search(Graph(3), {{0, 1, 2}, {}}, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPreconditionFailed);
  }
  // Edges inside A are malformed input, reported before any hypothesis.
  try {
    induce_hats_search(Graph(3, {{0, 1}, {0, 2}}), {{0, 1, 2}, {}}, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
  }
  // Strict mode at small r fails the hat-count hypothesis r^11/2^8 |B| only
  // when the count is short; a degree above 4r fails first here.
  Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  HatInductionOptions strict;
  strict.r = 1;
  EXPECT_THROW(induce_hats_search(star, {{0}, {1, 2, 3, 4, 5}}, strict), Error);
}

TEST(FixBranch, Examples) {
  GeneratedSubdivision s = subdivide(complete_graph(4), std::vector<std::size_t>(6, 1));
  BipartiteLayout part{{4, 5, 6, 7, 8, 9}, {0, 1, 2, 3}};
  FixBranchOptions opt;
  opt.relaxed = true;
  opt.target = Rational(3);
  auto res = fix_branch_search(s.graph, part, opt);
  ASSERT_EQ(res.status, SearchStatus::kFound);
  EXPECT_EQ(res.pattern, complete_graph(4));
  EXPECT_EQ(res.pattern_average_degree, 3);
  EXPECT_TRUE(verify_witness(s.graph, res.pattern, SubdivisionSpec::exactly(1, Occurrence::kInduced), res.witness).empty());

  opt.target = Rational(4);
  EXPECT_EQ(fix_branch_search(s.graph, part, opt).status, SearchStatus::kSearchExhausted);

  Graph bad(4, {{0, 1}, {0, 2}, {1, 3}});
  try {
    fix_branch_search(bad, {{0, 1}, {2, 3}}, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPreconditionFailed);
  }
}

TEST(FixBranch, StrictModeRequiresLargeR) {
  GeneratedSubdivision s = subdivide(complete_graph(4), std::vector<std::size_t>(6, 1));
  FixBranchOptions opt;
  opt.r = 3;
  EXPECT_THROW(fix_branch_search(s.graph, {{4, 5, 6, 7, 8, 9}, {0, 1, 2, 3}}, opt), Error);
  EXPECT_EQ(lemma_hats_input_ratio(Rational(2)), Rational(8));
  EXPECT_EQ(lemma_hats_output_ratio(Rational(2)), Rational(1, 64));
}

TEST(FixBranch, WitnessContractOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    // B = 0..5 with a sparse G[B]; A = 6..13 each adjacent to some of B.
    Graph base = random_gnp(6, 0.2, seed);
    Graph cross = random_bipartite(8, 6, 0.3, seed + 500);
    std::vector<Edge> edges = base.edges();
    for (const Edge& e : cross.edges()) edges.push_back(make_edge(static_cast<Vertex>(e.u + 6), static_cast<Vertex>(e.v - 8)));
    Graph g(14, edges);
    FixBranchOptions opt;
    opt.relaxed = true;
    opt.target = Rational(1);
    auto res = fix_branch_search(g, {{6, 7, 8, 9, 10, 11, 12, 13}, {0, 1, 2, 3, 4, 5}}, opt);
    if (res.status != SearchStatus::kFound) continue;
    ASSERT_TRUE(verify_witness(g, res.pattern, SubdivisionSpec::exactly(1, Occurrence::kInduced), res.witness).empty());
    ASSERT_GE(res.pattern_average_degree, 1);
    for (Vertex b : res.witness.branch_map) ASSERT_LT(b, 6U);
  }
}

}  // namespace
}  // namespace tgrad
