#include <gtest/gtest.h>

#include <random>

#include "circsign/graph.hpp"
#include "support/catalog.hpp"
#include "support/oracles.hpp"

using namespace circsign;

namespace {

Graph two_k2_plus_k1() {
  return disjoint_union(disjoint_union(graphs::complete(2), graphs::complete(2)),
                        graphs::complete(1));
}

}  // namespace

TEST(MakeGraph, Triangle) {
  const Graph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g, graphs::complete(3));
}

TEST(MakeGraph, RejectsLoop) { EXPECT_THROW(make_graph(4, {{0, 0}}), LoopEdge); }

TEST(MakeGraph, RejectsOutOfRange) {
  EXPECT_THROW(make_graph(2, {{0, 2}}), VertexOutOfRange);
  EXPECT_THROW(make_graph(2, {{-1, 1}}), VertexOutOfRange);
}

TEST(MakeGraph, DeduplicatesUnorderedPairs) {
  const Graph g = make_graph(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
}

TEST(Complement, CountsAndInvolution) {
  EXPECT_EQ(complement(graphs::cycle(6)).size(), 9u);
  EXPECT_EQ(complement(graphs::complete(4)), graphs::empty(4));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = testsupport::random_graph(rng, 1 + i % 9);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(DisjointUnion, Examples) {
  const Graph g = two_k2_plus_k1();
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(disjoint_union(graphs::cycle(5), graphs::empty(0)), graphs::cycle(5));
  const Graph kk = disjoint_union(graphs::complete(3), graphs::complete(3));
  EXPECT_EQ(kk.order(), 6);
  EXPECT_EQ(kk.size(), 6u);
  EXPECT_TRUE(kk.has_edge(3, 5));
  EXPECT_FALSE(kk.has_edge(2, 3));
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(graphs::cycle(5), {1, 2, 3}).graph, graphs::path(3));
  const Graph c6 = graphs::cycle(6);
  EXPECT_EQ(induced_subgraph(c6, {0, 1, 2, 3, 4, 5}).graph, c6);
  // with the cyclic labelling of C6 the prism triangles are {0,2,4}, {1,3,5}
  const Graph prism = complement(c6);
  EXPECT_EQ(induced_subgraph(prism, {0, 2, 4}).graph, graphs::complete(3));
  EXPECT_EQ(induced_subgraph(prism, {1, 3, 5}).graph, graphs::complete(3));
  EXPECT_THROW(induced_subgraph(prism, {0, 6}), VertexOutOfRange);
}

TEST(InducedSubgraph, CommutesWithComplement) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testsupport::random_graph(rng, 8);
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < 8; ++v)
      if (rng() & 1U) subset.push_back(v);
    EXPECT_EQ(complement(induced_subgraph(g, subset).graph),
              induced_subgraph(complement(g), subset).graph);
  }
}

TEST(InducedCycles, Examples) {
  const auto c6 = enumerate_induced_cycles(graphs::cycle(6));
  ASSERT_EQ(c6.size(), 1u);
  EXPECT_EQ(c6[0].length(), 6u);

  const auto prism = enumerate_induced_cycles(complement(graphs::cycle(6)));
  ASSERT_EQ(prism.size(), 5u);
  EXPECT_EQ(prism[0].length(), 3u);
  EXPECT_EQ(prism[1].length(), 3u);
  for (std::size_t i = 2; i < 5; ++i) EXPECT_EQ(prism[i].length(), 4u);

  const auto k4 = enumerate_induced_cycles(graphs::complete(4));
  ASSERT_EQ(k4.size(), 4u);
  for (const auto& c : k4) EXPECT_EQ(c.length(), 3u);
}

TEST(InducedCycles, CanonicalForm) {
  const auto cs = enumerate_induced_cycles(make_graph(5, {{4, 2}, {2, 0}, {0, 3}, {3, 4}}));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].vertices(), (std::vector<Vertex>{0, 2, 4, 3}));
}

TEST(InducedCycles, MaxLength) {
  const Graph g = disjoint_union(graphs::cycle(4), graphs::cycle(7));
  EXPECT_EQ(enumerate_induced_cycles(g, 5).size(), 1u);
  EXPECT_EQ(enumerate_induced_cycles(g).size(), 2u);
}

TEST(InducedCycles, MatchesSubsetOracleOnAllSmallGraphs) {
  for (const Graph& g : testsupport::all_graphs_up_to(7)) {
    const auto fast = enumerate_induced_cycles(g);
    const auto slow = testsupport::oracle::induced_cycles(g);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) ASSERT_EQ(fast[i].vertices(), slow[i]);
  }
}

TEST(InducedCycles, MatchesSubsetOracleOnRandomEightVertexGraphs) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 400; ++i) {
    const Graph g = testsupport::random_graph(rng, 8);
    const auto fast = enumerate_induced_cycles(g);
    const auto slow = testsupport::oracle::induced_cycles(g);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t k = 0; k < fast.size(); ++k) ASSERT_EQ(fast[k].vertices(), slow[k]);
  }
}

TEST(ContainsInduced, Examples) {
  EXPECT_FALSE(contains_induced(complement(graphs::cycle(6)), graphs::empty(3)));
  EXPECT_TRUE(contains_induced(graphs::cycle(4), graphs::complete(1)));
  EXPECT_FALSE(contains_induced(graphs::cycle(7), two_k2_plus_k1()));
  const auto map = contains_induced(graphs::petersen(), graphs::cycle(6));
  ASSERT_TRUE(map);
  EXPECT_EQ(induced_subgraph(graphs::petersen(), *map).graph, graphs::cycle(6));
}

TEST(ContainsInduced, MatchesSubsetOracle) {
  std::mt19937_64 rng(5);
  const std::vector<Graph> patterns{
      graphs::complete(3), graphs::empty(3), two_k2_plus_k1(),
      disjoint_union(graphs::cycle(5), graphs::complete(1)), graphs::cycle(6),
      graphs::path(4), graphs::wheel(4)};
  for (int i = 0; i < 150; ++i) {
    const Graph g = testsupport::random_graph(rng, 4 + i % 7);
    for (const Graph& p : patterns) {
      const auto fast = contains_induced(g, p);
      ASSERT_EQ(fast.has_value(), testsupport::oracle::contains_induced(g, p));
      if (fast) {
        EXPECT_EQ(induced_subgraph(g, *fast).graph, p);
      }
    }
  }
}

TEST(Families, Shapes) {
  EXPECT_EQ(graphs::wheel(5).order(), 6);
  EXPECT_EQ(graphs::wheel(5).degree(5), 5);
  EXPECT_EQ(graphs::petersen().size(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(graphs::petersen().degree(v), 3);
}
