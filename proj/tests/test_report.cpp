#include <gtest/gtest.h>

#include "bugraph/constructions.hpp"
#include "bugraph/report.hpp"

using namespace bugraph;

TEST(Report, RationalsAreStringPairs) {
  const Json j = rational_to_json(Rational(-7, 3));
  EXPECT_EQ(j["num"], "-7");
  EXPECT_EQ(j["den"], "3");
  EXPECT_EQ(rational_from_json(j), Rational(-7, 3));
  EXPECT_EQ(rational_to_json(Rational(4))["den"], "1");
  EXPECT_THROW(rational_from_json(Json{{"num", 1}, {"den", "2"}}), Error);
  EXPECT_THROW(rational_from_json(Json{{"num", "1"}, {"den", "0"}}), Error);
}

TEST(Report, BigValuesSurvive) {
  const BigInt big = parse_bigint("123456789012345678901234567890");
  const Rational r(big, BigInt(7));
  EXPECT_EQ(rational_from_json(rational_to_json(r)), r);
}

TEST(Report, BetweennessRoundTrip) {
  const auto rep = betweenness_report(grid(3, 4));
  const Json j = to_json(rep);
  const auto back = betweenness_report_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.vertex_bc, rep.vertex_bc);
  EXPECT_EQ(back.adjusted, rep.adjusted);
  EXPECT_EQ(back.uniform, rep.uniform);
  EXPECT_EQ(back.spread, rep.spread);
  ASSERT_EQ(back.edge_bc.size(), rep.edge_bc.size());
  for (std::size_t i = 0; i < rep.edge_bc.size(); ++i) {
    EXPECT_EQ(back.edge_bc[i].edge, rep.edge_bc[i].edge);
    EXPECT_EQ(back.edge_bc[i].value, rep.edge_bc[i].value);
  }
  EXPECT_EQ(to_json(back).dump(), j.dump());
  EXPECT_EQ(j.dump().find('.'), std::string::npos);
}

TEST(Report, VerificationRoundTrip) {
  VerifyOptions o;
  o.mutate = true;
  const auto rep = run_claim("EQ1", CorpusSource::generated(1, 4), o);
  ASSERT_FALSE(rep.counterexamples.empty());
  const auto back = verification_report_from_json(Json::parse(to_json(rep).dump()));
  EXPECT_TRUE(same_report(back, rep));
  EXPECT_EQ(to_json(back).dump(), to_json(rep).dump());
}

TEST(Report, DiscrepancyRoundTrip) {
  const Graph g = theta(3, 3);
  const auto b = disc_breakdown(g, minimal_two_cut(g));
  const auto back = discrepancy_breakdown_from_json(to_json(b));
  EXPECT_EQ(back.total, b.total);
  EXPECT_EQ(back.part_kplus, b.part_kplus);
  EXPECT_EQ(back.part_l, b.part_l);
  EXPECT_EQ(back.part_cross, b.part_cross);
}

TEST(Report, DocumentEnvelope) {
  const Json d = report_document("bc", Json{{"results", Json::array()}});
  EXPECT_EQ(d["tool"], "bugraph");
  EXPECT_EQ(d["command"], "bc");
  EXPECT_TRUE(d.contains("version"));
}
