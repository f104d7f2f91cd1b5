#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/families.hpp"
#include "unicyclic/graph6.hpp"
#include "unicyclic/invariants.hpp"
#include "unicyclic/verify.hpp"

using namespace unicyclic;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream s(text);
  for (std::string l; std::getline(s, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, BuildPipesIntoCompute) {
  const Result b = run({"build", "--n", "6", "--m", "4", "--d", "4", "--a", "2",
                        "--b", "0", "--k", "0"});
  ASSERT_EQ(b.code, 0) << b.err;
  const Result c = run({"compute"}, b.out);
  ASSERT_EQ(c.code, 0) << c.err;
  const json j = json::parse(c.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["reverse_degree_distance"], 130);
  EXPECT_EQ(j[0]["degree_distance"], 110);
}

TEST(Cli, BuildRoundTrip) {
  const Result b = run({"build", "--n", "11", "--m", "5", "--d", "6", "--a", "3",
                        "--b", "1", "--k", "1"});
  ASSERT_EQ(b.code, 0) << b.err;
  const Graph g = from_graph6(lines(b.out).at(0));
  const InvariantReport r = structural_profile(g);
  EXPECT_EQ(r.n, 11u);
  EXPECT_EQ(r.girth, 5u);
  EXPECT_EQ(r.diameter, 6);
  EXPECT_NE(b.out.find("# landmarks: v0=0"), std::string::npos);
}

TEST(Cli, BuildJson) {
  const Result b = run({"build", "--n", "6", "--m", "3", "--d", "3", "--a", "1",
                        "--b", "1", "--format", "json"});
  ASSERT_EQ(b.code, 0);
  const json j = json::parse(b.out);
  EXPECT_EQ(j["spec"]["name"], "U^0_{6,3,3}(1,1)");
  EXPECT_EQ(j["landmarks"]["v0"], 0);
  EXPECT_TRUE(j.contains("graph6"));
}

TEST(Cli, BuildInvalidParametersNameConstraint) {
  const Result b = run({"build", "--n", "6", "--m", "4", "--d", "4", "--a", "1",
                        "--b", "0"});
  EXPECT_EQ(b.code, 2);
  EXPECT_NE(b.err.find("a + b = d - floor(m/2)"), std::string::npos) << b.err;
}

TEST(Cli, ComputeCsvMatchesJson) {
  std::string input;
  for (const ClassMember& m : enumerate_unicyclic(6)) input += m.key.graph6() + "\n";
  const Result j = run({"compute", "--format", "json"}, input);
  const Result c = run({"compute", "--format", "csv"}, input);
  ASSERT_EQ(j.code, 0);
  ASSERT_EQ(c.code, 0);
  const json arr = json::parse(j.out);
  const auto rows = lines(c.out);
  ASSERT_EQ(rows.size(), arr.size() + 1);
  std::vector<std::string> header;
  {
    std::stringstream s(rows[0]);
    for (std::string h; std::getline(s, h, ',');) header.push_back(h);
  }
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::stringstream s(rows[i + 1]);
    std::size_t col = 0;
    for (std::string cell; std::getline(s, cell, ','); ++col) {
      const json& v = arr[i][header[col]];
      const std::string expected = v.is_string() ? v.get<std::string>() : v.dump();
      EXPECT_EQ(cell, expected) << header[col];
    }
  }
}

TEST(Cli, ComputeTableAndFile) {
  const auto path = std::filesystem::temp_directory_path() / "unicyclic_cli_in.g6";
  std::ofstream(path) << "Bw\nCx\n";
  const Result t = run({"compute", "--input", path.string(), "--format", "table"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(lines(t.out).size(), 3u);
  std::filesystem::remove(path);
}

TEST(Cli, ComputeMalformedGivesLineNumber) {
  const Result r = run({"compute"}, "Bw\n\nD?\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  const Result dis = run({"compute"}, "Bw\nC?\n");
  EXPECT_EQ(dis.code, 2);
  EXPECT_NE(dis.err.find("line 2"), std::string::npos) << dis.err;
}

TEST(Cli, EnumerateSix) {
  const Result r = run({"enumerate", "--n", "6"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 13u);
  const Result c = run({"enumerate", "--n", "7", "--girth", "3", "--count",
                        "--strategy", "tree-edge"});
  ASSERT_EQ(c.code, 0);
  std::size_t girth3 = 0;
  for (const auto& m : enumerate_unicyclic(7)) girth3 += m.report.girth == 3u ? 1 : 0;
  EXPECT_EQ(c.out, std::to_string(girth3) + "\n");
}

TEST(Cli, EnumerateAboveCeilingIsUsageError) {
  const Result r = run({"enumerate", "--n", "12"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--ceiling"), std::string::npos);
  const Result w = run({"enumerate", "--n", "5", "--ceiling", "12", "--count"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.err.find("warning"), std::string::npos);
}

TEST(Cli, Search) {
  const Result r = run({"search", "--n", "6", "--girth", "3", "--diameter", "3",
                        "--objective", "dd", "--direction", "min"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["optimum"], 92);
  EXPECT_EQ(j["witnesses"].size(), 1u);
  const Result bad = run({"search", "--n", "6", "--objective", "zagreb"});
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, Formula) {
  const Result r = run({"formula", "--name", "delta-lemma7", "--params", "n=6,m=3,d=3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["value"], 46);
  EXPECT_EQ(j["direct_value"], 46);
  EXPECT_EQ(j["match"], true);
  EXPECT_EQ(run({"formula", "--name", "wiener", "--params", "n=6,m=4"}).code, 2);
  EXPECT_EQ(run({"formula", "--name", "wiener", "--params", "n=six"}).code, 2);
  EXPECT_EQ(run({"formula", "--list"}).code, 0);
}

TEST(Cli, VerifyAllAtEight) {
  const auto path = std::filesystem::temp_directory_path() / "unicyclic_cli_report.json";
  const Result r = run({"verify", "--all", "--n-max", "8", "--output", path.string()});
  EXPECT_EQ(r.code, 0) << r.out;
  std::ifstream f(path);
  const json j = json::parse(f);
  EXPECT_EQ(j.size(), claim_catalog().size());
  for (const auto& c : j) EXPECT_EQ(c["status"], "pass") << c["id"];
  std::filesystem::remove(path);
}

TEST(Cli, VerifyFailureExitsOne) {
  const Result r = run({"verify", "--claim", "thm4", "--n-max", "9"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("n=9 Delta=4"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--n-max", "8"}).code, 2);
  EXPECT_EQ(run({"verify", "--all", "--claim", "thm1", "--n-max", "8"}).code, 2);
  EXPECT_EQ(run({"verify", "--claim", "nope", "--n-max", "8"}).code, 2);
  EXPECT_EQ(run({"build", "--n", "6"}).code, 2);
  EXPECT_EQ(run({"compute", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
