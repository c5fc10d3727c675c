#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "bugraph/constructions.hpp"
#include "bugraph/graph6.hpp"
#include "bugraph/report.hpp"

using namespace bugraph;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

/// Runs the CLI with `args`, feeding `input` on standard input.
Result cli(const std::string& args, const std::string& input = "") {
  const std::string in_path = ::testing::TempDir() + "bugraph_cli_in.txt";
  {
    std::ofstream f(in_path);
    f << input;
  }
  const std::string cmd = std::string(BUGRAPH_CLI_PATH) + " " + args + " < " + in_path + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST(Cli, BcOnFiveCycle) {
  const auto r = cli("bc Dhc");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("uniform=true"), std::string::npos);
  EXPECT_NE(r.out.find("B: 1/1 1/1 1/1 1/1 1/1"), std::string::npos);
}

TEST(Cli, BcJsonOnStar) {
  const auto r = cli("bc --json " + encode_graph6(star(3)));
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "bc");
  const auto rep = betweenness_report_from_json(j["results"][0]["betweenness"]);
  EXPECT_EQ(rep.vertex_bc, (std::vector<Rational>{3, 0, 0, 0}));
  EXPECT_FALSE(rep.uniform);
}

TEST(Cli, BcCheckEq1) {
  const auto r = cli("bc --check-eq1 " + encode_graph6(grid(3, 3)) + " " + encode_graph6(petersen()));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("EQ1 PASS"), std::string::npos);
}

TEST(Cli, BcRejectsMalformedAndDisconnected) {
  EXPECT_EQ(cli("bc D!c").code, 2);
  EXPECT_EQ(cli("bc " + encode_graph6(Graph::empty(3))).code, 2);
  EXPECT_EQ(cli("bc", "Dhc\nbad line\n").code, 2);
}

TEST(Cli, JsonIsByteIdentical) {
  const std::string args = "bc --json " + encode_graph6(theta(3, 4));
  EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(Cli, UniformStream) {
  const auto all4 = cli("enumerate -n 4");
  ASSERT_EQ(all4.code, 0);
  const auto filtered = cli("uniform --filter", all4.out);
  EXPECT_EQ(filtered.code, 0);
  EXPECT_EQ(std::count(filtered.out.begin(), filtered.out.end(), '\n'), 2);
  const auto empty = cli("uniform", "");
  EXPECT_EQ(empty.code, 0);
  EXPECT_TRUE(empty.out.empty());
  EXPECT_NE(cli("uniform " + encode_graph6(complete_bipartite(3, 3))).out.find("uniform 1/1"), std::string::npos);
}

TEST(Cli, VerifyPassAndUnknownClaim) {
  EXPECT_EQ(cli("verify --claim THM-CONN -n 6").code, 0);
  EXPECT_EQ(cli("verify --claim EQ1 -n 6").code, 0);
  const auto bad = cli("verify --claim NOPE");
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(cli("verify").code, 2);
  EXPECT_EQ(cli("verify --list").code, 0);
}

TEST(Cli, VerifyPlantedCorpus) {
  const Graph planted = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}});
  const std::string path = write_temp("planted.g6", encode_graph6(cycle(5)) + "\n" + encode_graph6(planted) + "\n");
  EXPECT_EQ(cli("verify --claim THM-CONN --corpus " + path).code, 0);
  const auto r = cli("verify --claim THM-CONN --assume-uniform --json --corpus " + path);
  EXPECT_EQ(r.code, 1);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "FAIL");
  EXPECT_EQ(j["reports"][0]["counterexamples"][0]["graph6"], encode_graph6(planted));
}

TEST(Cli, VerifyMutateFails) { EXPECT_EQ(cli("verify --claim EDGE-BC -n 5 --mutate").code, 1); }

TEST(Cli, VerifyCap) {
  EXPECT_EQ(cli("verify --claim EQ1 -n 11").code, 2);
  EXPECT_EQ(cli("verify --claim EQ1 -n 9").code, 2);
}

TEST(Cli, VerifyJsonDeterministicAcrossThreads) {
  auto strip = [](const std::string& text) {
    Json j = Json::parse(text);
    for (auto& r : j["reports"]) r.erase("elapsed_seconds");
    return j.dump();
  };
  EXPECT_EQ(strip(cli("verify --claim EQ2 -n 6 --json --threads 1").out),
            strip(cli("verify --claim EQ2 -n 6 --json --threads 3").out));
}

TEST(Cli, Construct) {
  const auto c7 = cli("construct cycle 7");
  EXPECT_EQ(c7.code, 0);
  EXPECT_EQ(c7.out, encode_graph6(cycle(7)) + "\n");
  const auto t = cli("construct tight --ell 3 --d 5 --n 14 --verify");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("PASS"), std::string::npos);
  EXPECT_EQ(cli("construct tight --ell 3 --d 5 --n 10").code, 2);
  EXPECT_EQ(cli("construct petersen --verify").code, 0);
  EXPECT_EQ(cli("construct dodecahedron").code, 2);
  EXPECT_EQ(cli("construct cycle").code, 2);
}

TEST(Cli, Disc) {
  const auto c6 = cli("disc --minimal " + encode_graph6(cycle(6)));
  EXPECT_EQ(c6.code, 0);
  EXPECT_NE(c6.out.find("disc 0/1"), std::string::npos);
  EXPECT_NE(c6.out.find("case A"), std::string::npos);
  EXPECT_EQ(cli("disc --p 0 --q 1 " + encode_graph6(complete(4))).code, 2);
  EXPECT_EQ(cli("disc --minimal " + encode_graph6(complete(4))).code, 2);
  const Graph diamond = Graph::from_edge_list(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto d = cli("disc --json --p 2 --q 3 " + encode_graph6(diamond));
  ASSERT_EQ(d.code, 0);
  const auto b = discrepancy_breakdown_from_json(Json::parse(d.out)["disc"]);
  EXPECT_GT(b.total, 0);
  EXPECT_EQ(b.total, b.parts_sum());
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(cli("enumerate -n 6 --count").out, "112\n");
  EXPECT_EQ(cli("enumerate -n 5 --two-connected --count").out, "10\n");
  EXPECT_EQ(cli("enumerate -n 8 --uniform --count").out, "12\n");
  EXPECT_EQ(cli("enumerate -n 9").code, 2);
}
