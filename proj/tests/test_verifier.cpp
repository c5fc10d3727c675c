#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "bugraph/constructions.hpp"
#include "bugraph/graph6.hpp"
#include "bugraph/report.hpp"
#include "bugraph/verifier.hpp"

using namespace bugraph;

namespace {

// C_4 with its chord 0-2 subdivided by vertex 4; K_{2,3} up to isomorphism
const Graph kSubdividedC4 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}});

}  // namespace

TEST(Verifier, RegistryIsComplete) {
  EXPECT_EQ(claim_ids(), (std::vector<std::string>{"THM-CONN", "THM-DIAM", "THM-GENCONN", "LEM-AVGDIST", "LEM-AVGBC",
                                                   "EQ1", "EDGE-BC", "EQ2", "OBS-SMALLK", "OBS-KZERO", "PROP1",
                                                   "PROP2-TIGHT"}));
  EXPECT_THROW(find_claim("THM-NOPE"), UnknownClaim);
}

TEST(Verifier, ExplicitUniformCorpus) {
  const auto r = run_claim("THM-CONN", CorpusSource::explicit_list({cycle(5), complete(5), petersen()}, "fixtures"));
  EXPECT_EQ(r.verdict(), Verdict::Pass);
  EXPECT_EQ(r.graphs_checked, 3U);
  EXPECT_EQ(r.hypothesis_count, 3U);
  EXPECT_EQ(r.corpus, "fixtures");
}

TEST(Verifier, PlantedMislabelledGraphIsReported) {
  VerifyOptions o;
  o.assume_hypothesis = true;
  const auto r = run_claim("THM-CONN", CorpusSource::explicit_list({kSubdividedC4}, "planted"), o);
  EXPECT_EQ(r.verdict(), Verdict::Fail);
  ASSERT_EQ(r.counterexamples.size(), 1U);
  EXPECT_EQ(r.counterexamples[0].graph6, encode_graph6(kSubdividedC4));
  const auto honest = run_claim("THM-CONN", CorpusSource::explicit_list({kSubdividedC4}, "planted"));
  EXPECT_EQ(honest.verdict(), Verdict::Warn);
}

TEST(Verifier, VacuousRunWarns) {
  const auto r = run_claim("EQ2", CorpusSource::explicit_list({complete(5), path(4)}, "no kappa 2"));
  EXPECT_EQ(r.graphs_checked, 2U);
  EXPECT_EQ(r.hypothesis_count, 0U);
  EXPECT_EQ(r.verdict(), Verdict::Warn);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Verifier, SmallCorpusPasses) {
  for (const std::string id : {"THM-CONN", "THM-DIAM", "THM-GENCONN", "LEM-AVGDIST", "LEM-AVGBC", "EQ1", "EDGE-BC",
                               "EQ2", "OBS-SMALLK", "OBS-KZERO", "PROP2-TIGHT"}) {
    const auto r = run_claim(id, CorpusSource::generated(1, 6));
    EXPECT_EQ(r.verdict(), Verdict::Pass) << id;
  }
}

TEST(Verifier, MutationFlipsEveryClaim) {
  VerifyOptions o;
  o.mutate = true;
  for (const auto& c : claim_registry()) {
    const auto r = run_claim(c, CorpusSource::generated(1, 6), o);
    EXPECT_EQ(r.verdict(), Verdict::Fail) << c.id;
  }
}

TEST(Verifier, CaseAFormulasFailOnGeneralGraphs) {
  const auto short_cycles = run_claim("PROP1", CorpusSource::explicit_list({cycle(4), cycle(5), cycle(6)}, "cycles"));
  EXPECT_EQ(short_cycles.verdict(), Verdict::Pass);
  // on C_7 the alpha = 2 value is exactly 0: the closed form holds but the
  // open interval does not
  const auto c7 = run_claim("PROP1", CorpusSource::explicit_list({cycle(7)}, "C_7"));
  EXPECT_EQ(c7.verdict(), Verdict::Fail);
  EXPECT_EQ(c7.tallies.count("formula_mismatch_alpha_2"), 0U);
  EXPECT_EQ(c7.tallies.at("open_interval_violation"), 14);
  const auto r = run_claim("PROP1", CorpusSource::generated(1, 6));
  EXPECT_EQ(r.verdict(), Verdict::Fail);
  const bool found = std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                                 [](const Counterexample& c) { return c.graph6 == "EKNG"; });
  EXPECT_TRUE(found);
  EXPECT_EQ(r.tallies.count("formula_mismatch_unique_pq_geodesic"), 0U);
}

TEST(Verifier, DeterministicAcrossThreadCounts) {
  VerifyOptions one;
  VerifyOptions four;
  four.threads = 4;
  for (const std::string id : {"EQ2", "PROP1", "THM-CONN"}) {
    const auto a = run_claim(id, CorpusSource::generated(1, 7), one);
    const auto b = run_claim(id, CorpusSource::generated(1, 7), four);
    EXPECT_TRUE(same_report(a, b)) << id;
    Json ja = to_json(a);
    Json jb = to_json(b);
    ja.erase("elapsed_seconds");
    jb.erase("elapsed_seconds");
    EXPECT_EQ(ja.dump(), jb.dump()) << id;
  }
}

TEST(Verifier, FileCorpusSkipsDisconnected) {
  const std::string path = ::testing::TempDir() + "bugraph_corpus.g6";
  {
    std::ofstream out(path);
    out << encode_graph6(cycle(5)) << '\n' << encode_graph6(Graph::empty(3)) << '\n' << encode_graph6(petersen()) << '\n';
  }
  const auto r = run_claim("THM-CONN", CorpusSource::file(path));
  EXPECT_EQ(r.graphs_checked, 2U);
  EXPECT_EQ(r.tallies.at("skipped_disconnected"), 1);
  EXPECT_EQ(r.verdict(), Verdict::Pass);
  std::remove(path.c_str());
  EXPECT_THROW(run_claim("THM-CONN", CorpusSource::file(path)), Error);
}

TEST(Verifier, DiscSignTallies) {
  const auto r = run_claim("EQ2", CorpusSource::generated(4, 7));
  EXPECT_EQ(r.verdict(), Verdict::Pass);
  EXPECT_EQ(r.tallies.count("disc_negative_non_cycle"), 0U);
  EXPECT_EQ(r.tallies.at("disc_zero_cycle"), 4);  // C_4 .. C_7
}

TEST(Verifier, TightnessGrid) {
  const auto r = run_claim("PROP2-TIGHT", CorpusSource{});
  EXPECT_EQ(r.verdict(), Verdict::Pass);
  EXPECT_EQ(r.graphs_checked, 27U);
  EXPECT_EQ(r.tallies.at("ell_divides_k_minus_3"), 27);
}
