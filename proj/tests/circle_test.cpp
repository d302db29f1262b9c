#include <gtest/gtest.h>

#include <random>

#include "circsign/circle.hpp"
#include "circsign/signed_graph.hpp"
#include "support/catalog.hpp"
#include "support/oracles.hpp"

using namespace circsign;

namespace {

RationalAngle A(std::int64_t n, std::int64_t d) { return RationalAngle(n, d); }

std::vector<RationalAngle> random_points(std::mt19937_64& rng, std::size_t count, int max_den) {
  std::vector<RationalAngle> pts;
  while (pts.size() < count) {
    const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(max_den));
    const RationalAngle a(static_cast<std::int64_t>(rng() % static_cast<unsigned>(d)), d);
    if (std::find(pts.begin(), pts.end(), a) == pts.end()) pts.push_back(a);
  }
  return pts;
}

}  // namespace

TEST(CircDist, Examples) {
  EXPECT_EQ(circ_dist(A(0, 1), A(2, 5)), Fraction(2, 5));
  EXPECT_EQ(circ_dist(A(1, 10), A(9, 10)), Fraction(1, 5));
  EXPECT_EQ(circ_dist(A(3, 7), A(3, 7)), Fraction(0));
}

TEST(Adjacent, Boundary) {
  EXPECT_TRUE(adjacent(CircleKind::C3, A(0, 1), A(2, 5)));
  EXPECT_FALSE(adjacent(CircleKind::C3, A(0, 1), A(1, 3)));
  EXPECT_TRUE(adjacent(CircleKind::C3Complement, A(0, 1), A(1, 3)));
  EXPECT_FALSE(adjacent(CircleKind::C3Complement, A(1, 3), A(1, 3)));
  for (int i = 0; i < 5; ++i) {
    EXPECT_TRUE(adjacent(CircleKind::C3Complement, A(i, 5), A(i + 1, 5)));
  }
}

TEST(InducedModel, Examples) {
  const auto& p = pentagon();
  const std::vector<RationalAngle> pts(p.begin(), p.end());
  EXPECT_EQ(induced_model(CircleKind::C3Complement, pts), graphs::cycle(5));
  // the C3 model joins points two steps apart
  const Graph c3 = induced_model(CircleKind::C3, pts);
  EXPECT_EQ(c3.size(), 5u);
  EXPECT_TRUE(c3.has_edge(0, 2));
  EXPECT_TRUE(contains_induced(c3, graphs::cycle(5)));
  EXPECT_EQ(induced_model(CircleKind::C3, {A(0, 1), A(1, 2)}), graphs::complete(2));
  EXPECT_THROW(induced_model(CircleKind::C3, {A(1, 2), A(2, 4)}), DuplicatePoint);
}

TEST(InducedModel, ComplementDuality) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto pts = random_points(rng, 1 + i % 12, 40);
    EXPECT_EQ(induced_model(CircleKind::C3, pts),
              complement(induced_model(CircleKind::C3Complement, pts)));
  }
}

TEST(EmbedsInC3, Examples) {
  const auto c6 = embeds_in_c3(graphs::cycle(6));
  EXPECT_FALSE(c6);
  EXPECT_EQ(c6.obstruction, C3Obstruction::C6);
  EXPECT_EQ(induced_subgraph(graphs::cycle(6), c6.witness).graph, graphs::cycle(6));
  EXPECT_TRUE(embeds_in_c3(graphs::cycle(7)));
  const auto k3 = embeds_in_c3(graphs::complete(3));
  EXPECT_FALSE(k3);
  EXPECT_EQ(k3.obstruction, C3Obstruction::K3);
}

TEST(FindC3Embedding, Examples) {
  const Graph c7 = graphs::cycle(7);
  const auto pts = find_c3_embedding(c7);
  ASSERT_TRUE(pts);
  EXPECT_EQ(induced_model(CircleKind::C3, *pts), c7);
  EXPECT_FALSE(find_c3_embedding(graphs::complete(3)));
  const auto edge = find_c3_embedding(graphs::complete(2));
  ASSERT_TRUE(edge);
  EXPECT_EQ(*edge, (std::vector<RationalAngle>{A(0, 1), A(1, 2)}));
}

TEST(FindC3Embedding, ExhaustedCapIsReported) {
  // two non-adjacent points need a grid finer than halves
  EXPECT_THROW(find_c3_embedding(graphs::empty(2), {2, false}), WitnessSearchExhausted);
  EXPECT_TRUE(find_c3_embedding(graphs::empty(2), {3, false}));
  EXPECT_THROW(find_c3_embedding(graphs::cycle(7), {6, false}), WitnessSearchExhausted);
}

TEST(FindC3Embedding, GenericModeAvoidsDegeneracy) {
  for (const Graph& g : testsupport::all_graphs_up_to(6)) {
    const auto pts = find_c3_embedding(g, {0, true});
    if (!pts) continue;
    EXPECT_EQ(induced_model(CircleKind::C3, *pts), g);
    for (const auto& a : *pts) EXPECT_FALSE(is_anchor(a));
    EXPECT_NO_THROW(epsilon_bound(*pts));
  }
}

TEST(C3, AgreesWithForbiddenSubgraphsAndAntiEvenComplements) {
  const std::vector<Graph> forbidden{
      graphs::complete(3),
      disjoint_union(disjoint_union(graphs::complete(2), graphs::complete(2)),
                     graphs::complete(1)),
      disjoint_union(graphs::cycle(5), graphs::complete(1)), graphs::cycle(6)};
  for (const Graph& g : testsupport::all_graphs_up_to(6)) {
    bool free = true;
    for (const Graph& f : forbidden) free = free && !testsupport::oracle::contains_induced(g, f);
    const bool embeds = embeds_in_c3(g).embeds;
    ASSERT_EQ(embeds, free);
    const auto pts = find_c3_embedding(g, {120, false});
    ASSERT_EQ(pts.has_value(), embeds);
    if (pts) {
      ASSERT_EQ(induced_model(CircleKind::C3, *pts), g);
    }
    if (!contains_induced(g, graphs::complete(3))) {
      ASSERT_EQ(embeds, find_balancing(complement(g), BalanceRule::anti_even()).has_value());
    }
  }
}

TEST(EpsilonBound, Examples) {
  EXPECT_EQ(epsilon_bound({A(0, 1), A(1, 2)}), Fraction(1, 60));
  const auto& p = pentagon();
  EXPECT_EQ(epsilon_bound(std::vector<RationalAngle>(p.begin(), p.end())), Fraction(1, 30));
  EXPECT_THROW(epsilon_bound({A(0, 1), A(1, 3)}), DegenerateConfiguration);
  EXPECT_THROW(epsilon_bound({A(1, 7), A(1, 7)}), DuplicatePoint);
}

TEST(EpsilonBound, MovesBelowBoundKeepAdjacency) {
  std::mt19937_64 rng(6);
  int done = 0;
  while (done < 300) {
    const auto pts = random_points(rng, 2 + rng() % 10, 50);
    Fraction eps;
    try {
      eps = epsilon_bound(pts);
    } catch (const DegenerateConfiguration&) {
      continue;
    }
    ++done;
    std::vector<RationalAngle> moved;
    for (const auto& a : pts) {
      // offset in (-eps, eps) from a random numerator over 1000
      const std::int64_t k = static_cast<std::int64_t>(rng() % 1999) - 999;
      moved.emplace_back(a.turns() + eps * Fraction(k, 1000));
    }
    bool distinct = true;
    for (std::size_t i = 0; i < moved.size(); ++i)
      for (std::size_t j = i + 1; j < moved.size(); ++j) distinct = distinct && moved[i] != moved[j];
    if (!distinct) continue;
    EXPECT_EQ(induced_model(CircleKind::C3, moved), induced_model(CircleKind::C3, pts));
  }
}
