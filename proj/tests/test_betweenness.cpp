#include <gtest/gtest.h>

#include "bugraph/betweenness.hpp"
#include "bugraph/constructions.hpp"
#include "bugraph/enumeration.hpp"
#include "bugraph/graph6.hpp"
#include "oracles.hpp"

using namespace bugraph;

namespace {

void expect_matches_oracle(const Graph& g) {
  const auto bc = vertex_betweenness(g);
  const auto expected = oracle::betweenness(g);
  ASSERT_EQ(bc.size(), expected.size());
  for (std::size_t x = 0; x < bc.size(); ++x)
    EXPECT_EQ(bc[x], expected[x]) << encode_graph6(g) << " vertex " << x;
  const auto eb = oracle::edge_betweenness(g);
  for (const auto& e : edge_betweenness(g)) EXPECT_EQ(e.value, eb.at(e.edge)) << encode_graph6(g);
}

Rational r(long a, long b = 1) { return Rational(a, b); }

}  // namespace

TEST(Betweenness, PathCounts) {
  const auto pc = path_counts(cycle(6), 0);
  EXPECT_EQ(pc.dist[3], 3);
  EXPECT_EQ(pc.sigma[3], 2);
  EXPECT_EQ(pc.sigma[2], 1);
  EXPECT_EQ(pc.predecessors[3], (VertexSet{2, 4}));
  EXPECT_THROW(path_counts(Graph::empty(2), 0), DisconnectedGraph);
}

TEST(Betweenness, KnownFixtures) {
  for (const auto& b : vertex_betweenness(cycle(5))) EXPECT_EQ(b, 1);
  for (const auto& b : vertex_betweenness(petersen())) EXPECT_EQ(b, 3);
  const auto s = vertex_betweenness(star(3));
  EXPECT_EQ(s[0], 3);
  EXPECT_EQ(s[1], 0);
  const auto p = vertex_betweenness(path(4));
  EXPECT_EQ(p, (std::vector<Rational>{0, 2, 2, 0}));
  for (const auto& b : vertex_betweenness(complete(6))) EXPECT_EQ(b, 0);
  // C_4: the two geodesics between opposite vertices split evenly
  for (const auto& b : vertex_betweenness(cycle(4))) EXPECT_EQ(b, r(1, 2));
}

TEST(Betweenness, FixturesAgreeWithOracle) {
  for (const Graph& g : {cycle(5), petersen(), complete_bipartite(3, 3), complete_bipartite(2, 3), grid(3, 3),
                         theta(3, 3)})
    expect_matches_oracle(g);
}

TEST(Betweenness, AllConnectedGraphsUpToSixMatchOracle) {
  std::size_t count = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : generate_connected(n)) {
      expect_matches_oracle(g);
      ++count;
    }
  EXPECT_EQ(count, 143U);
}

TEST(Betweenness, RandomGraphsMatchOracle) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) expect_matches_oracle(oracle::random_connected(rng, 2 + i % 11, 0.25));
}

TEST(Betweenness, Uniformity) {
  EXPECT_TRUE(is_betweenness_uniform(complete_bipartite(3, 3)).uniform);
  EXPECT_EQ(*is_betweenness_uniform(complete_bipartite(3, 3)).value, 1);
  EXPECT_FALSE(is_betweenness_uniform(complete_bipartite(2, 3)).uniform);
  EXPECT_FALSE(is_betweenness_uniform(complete_bipartite(2, 3)).value.has_value());
  EXPECT_TRUE(is_betweenness_uniform(petersen()).uniform);
  const auto rep = betweenness_report(star(3));
  EXPECT_FALSE(rep.uniform);
  EXPECT_EQ(rep.spread, 3);
}

TEST(Betweenness, EdgeValuesAtLeastOne) {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i)
    for (const auto& e : edge_betweenness(oracle::random_connected(rng, 2 + i % 10, 0.3))) EXPECT_GE(e.value, 1);
}

TEST(Betweenness, AdjustedIdentity) {
  std::mt19937 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_connected(rng, 1 + i % 12, 0.3);
    const auto rep = betweenness_report(g);
    for (Vertex x = 0; x < g.order(); ++x)
      EXPECT_EQ(rep.vertex_bc[x], betweenness_from_adjusted(rep.adjusted[x], g.order()));
  }
}

TEST(Betweenness, MeanFromDistances) {
  EXPECT_EQ(mean_betweenness_via_distance(Graph::empty(1)), 0);
  EXPECT_EQ(mean_betweenness_via_distance(complete(5)), 0);
  EXPECT_EQ(mean_betweenness_via_distance(cycle(5)), 1);
  std::mt19937 rng(10);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_connected(rng, 1 + i % 12, 0.3);
    const auto bc = oracle::betweenness(g);
    Rational sum(0);
    for (const auto& b : bc) sum += b;
    EXPECT_EQ(mean_betweenness_via_distance(g), sum / g.order());
    EXPECT_EQ(average_betweenness(g, g.vertices()), sum / g.order());
  }
}

TEST(Betweenness, PairRestrictedSumsPartitionTotal) {
  std::mt19937 rng(12);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_connected(rng, 3 + i % 8, 0.3);
    const GeodesicTable t(g);
    const auto bc = vertex_betweenness(g);
    const VertexSet a = VertexSet::range(g.order() / 2);
    const VertexSet b = g.vertices() - a;
    for (Vertex u = 0; u < g.order(); ++u) {
      const Rational parts = pair_induced_betweenness(t, pairs_within(a), u) +
                             pair_induced_betweenness(t, pairs_within(b), u) +
                             pair_induced_betweenness(t, pairs_between(a, b), u);
      EXPECT_EQ(parts, bc[u]);
      EXPECT_EQ(pair_induced_betweenness(t, pairs_within(g.vertices()), u), bc[u]);
    }
  }
}

TEST(Betweenness, PairSets) {
  EXPECT_EQ(pairs_within(VertexSet{1, 3, 4}), (PairSet{{1, 3}, {1, 4}, {3, 4}}));
  EXPECT_EQ(pairs_between(VertexSet{4}, VertexSet{1, 2}), (PairSet{{1, 4}, {2, 4}}));
  EXPECT_EQ(subset_induced_betweenness(path(3), VertexSet{0, 1, 2}, 1), 1);
  EXPECT_EQ(subset_induced_betweenness(path(3), VertexSet{0, 1}, 1), 0);
}

TEST(Betweenness, RejectsDisconnected) {
  EXPECT_THROW(vertex_betweenness(Graph::empty(3)), DisconnectedGraph);
  EXPECT_THROW(is_betweenness_uniform(Graph::from_edge_list(4, {{0, 1}, {2, 3}})), DisconnectedGraph);
}

TEST(Betweenness, LargeCountsStayExact) {
  // 5 x 12 grid: compare mirrored vertices and the distance formula
  const Graph g = grid(5, 12);
  const auto bc = vertex_betweenness(g);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 12; ++c) {
      EXPECT_EQ(bc[r * 12 + c], bc[(4 - r) * 12 + (11 - c)]);
      EXPECT_EQ(bc[r * 12 + c], bc[r * 12 + (11 - c)]);
    }
  Rational sum(0);
  for (const auto& b : bc) sum += b;
  EXPECT_EQ(sum / 60, mean_betweenness_via_distance(g));
}
