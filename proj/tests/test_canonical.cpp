#include <gtest/gtest.h>

#include <numeric>

#include "bugraph/canonical.hpp"
#include "bugraph/constructions.hpp"
#include "bugraph/graph6.hpp"
#include "oracles.hpp"

using namespace bugraph;

namespace {

std::vector<Vertex> random_perm(std::mt19937& rng, int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937 rng(51);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 10;
    const Graph g = oracle::random_graph(rng, n, 0.45);
    const auto perm = random_perm(rng, n);
    EXPECT_EQ(canonical_form(g), canonical_form(g.relabeled(perm))) << encode_graph6(g);
  }
}

TEST(Canonical, FormIsIsomorphicToInput) {
  std::mt19937 rng(52);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 8, 0.5);
    const CanonicalLabeling lab = canonical_labeling(g);
    const Graph c = lab.form.to_graph();
    EXPECT_EQ(oracle::canonical_string(c), oracle::canonical_string(g));
    // order[pos] is the input vertex placed at pos
    std::vector<Vertex> inverse(g.order());
    for (int pos = 0; pos < g.order(); ++pos) inverse[lab.order[pos]] = pos;
    EXPECT_EQ(g.relabeled(inverse), c);
  }
}

TEST(Canonical, AgreesWithAllPermutationOracle) {
  // every labelled graph on 5 vertices: same canonical form iff same
  // all-permutation minimum string
  std::map<std::string, CanonicalForm> by_oracle;
  std::map<CanonicalForm, std::string> by_form;
  for (int mask = 0; mask < (1 << 10); ++mask) {
    std::vector<Edge> e;
    int k = 0;
    for (int j = 1; j < 5; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if ((mask >> k) & 1) e.emplace_back(i, j);
    const Graph g = Graph::from_edge_list(5, e);
    const std::string s = oracle::canonical_string(g);
    const CanonicalForm f = canonical_form(g);
    auto [it, fresh] = by_oracle.emplace(s, f);
    if (!fresh) EXPECT_EQ(it->second, f);
    auto [jt, fresh2] = by_form.emplace(f, s);
    if (!fresh2) EXPECT_EQ(jt->second, s);
  }
  EXPECT_EQ(by_oracle.size(), 34U);  // graphs on 5 vertices up to isomorphism
}

TEST(Canonical, Isomorphism) {
  EXPECT_TRUE(are_isomorphic(decode_graph6("IheA@GUAo"), petersen()));
  EXPECT_FALSE(are_isomorphic(petersen(), grid(2, 5)));
  EXPECT_FALSE(are_isomorphic(cycle(6), Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  EXPECT_TRUE(are_isomorphic(complete_bipartite(2, 3), complete_bipartite(3, 2)));
}

TEST(Canonical, RegularGraphsOfSameDegree) {
  // C_8 versus two C_4: identical refinement, different classes
  const Graph two = Graph::from_edge_list(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  EXPECT_NE(canonical_form(cycle(8)), canonical_form(two));
  // cube versus the Wagner graph, both 3-regular on 8 vertices
  const Graph cube = Graph::from_edge_list(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  const Graph wagner = Graph::from_edge_list(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  EXPECT_NE(canonical_form(cube), canonical_form(wagner));
  std::mt19937 rng(53);
  EXPECT_EQ(canonical_form(cube), canonical_form(cube.relabeled(random_perm(rng, 8))));
}

TEST(Canonical, RejectsLargeGraphs) { EXPECT_THROW(canonical_form(cycle(11)), TooLarge); }
