#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "unicyclic/error.hpp"
#include "unicyclic/formulas.hpp"
#include "unicyclic/verify.hpp"

using namespace unicyclic;

namespace {

const ClaimReport& find(const std::vector<ClaimReport>& all, const std::string& id) {
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const ClaimReport& r) { return r.id == id; });
  if (it == all.end()) throw std::runtime_error("no report " + id);
  return *it;
}

}  // namespace

TEST(Verify, CatalogIdsUnique) {
  std::set<std::string> ids;
  for (const ClaimInfo& c : claim_catalog()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  for (const char* id : {"gutman-tree", "lemma7", "lemma8-consistency", "thm1",
                         "thm4", "rdd-closed-i"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
}

TEST(Verify, Thm1AtTen) {
  const ClaimReport r = verify_claim("thm1", 10);
  EXPECT_EQ(r.status, ClaimStatus::Pass);
  EXPECT_EQ(r.range.n_min, 6);
  EXPECT_EQ(r.range.n_max, 10);
  EXPECT_GT(r.range.points_checked, 0u);
}

TEST(Verify, Lemma7AndIdentities) {
  EXPECT_EQ(verify_claim("lemma7", 10).status, ClaimStatus::Pass);
  EXPECT_EQ(verify_claim("gutman-tree", 9).status, ClaimStatus::Pass);
  EXPECT_EQ(verify_claim("rdd-closed-i", 30).status, ClaimStatus::Pass);
}

TEST(Verify, UnknownClaimAndCeiling) {
  EXPECT_THROW(verify_claim("lemma99", 8), ParameterError);
  EXPECT_THROW(verify_claim("thm1", 12), ParameterError);
  VerifyOptions low;
  low.ceiling = 7;
  EXPECT_THROW(verify_claim("cor1", 8, low), ParameterError);
}

TEST(Verify, AllAtEightPasses) {
  const auto reports = verify_all(8);
  EXPECT_EQ(reports.size(), claim_catalog().size());
  EXPECT_FALSE(any_failed(reports));
  for (const auto& r : reports) EXPECT_EQ(r.status, ClaimStatus::Pass) << r.id;
}

TEST(Verify, RangeTooSmallAtThree) {
  const auto reports = verify_all(3);
  for (const ClaimInfo& c : claim_catalog()) {
    const ClaimReport& r = find(reports, c.id);
    if (c.n_min > 3) {
      EXPECT_EQ(r.status, ClaimStatus::RangeTooSmall) << c.id;
    }
  }
  EXPECT_EQ(find(reports, "gutman-tree").status, ClaimStatus::Pass);
  EXPECT_EQ(find(reports, "thm1").status, ClaimStatus::RangeTooSmall);
  // formula claims still run on their own range
  EXPECT_EQ(verify_claim("lemma7-positivity", 30).status, ClaimStatus::Pass);
}

TEST(Verify, AllClipsAtCeiling) {
  VerifyOptions opt;
  opt.ceiling = 7;
  const auto reports = verify_all(9, opt);
  const ClaimReport& thm1 = find(reports, "thm1");
  EXPECT_EQ(thm1.range.n_max, 7);
  EXPECT_FALSE(thm1.range.skipped.empty());
  EXPECT_EQ(find(reports, "lemma8-consistency").range.n_max, 9);
}

TEST(Verify, MutationIsCaught) {
  VerifyOptions opt;
  opt.wiener_override = [](int n, int m, int d, int a, int b) {
    return wiener_closed(n, m, d, a, b) + (a == 2 && b == 1 ? 1 : 0);
  };
  const ClaimReport r = verify_claim("lemma8-consistency", 9, opt);
  ASSERT_EQ(r.status, ClaimStatus::Fail);
  ASSERT_FALSE(r.counterexamples.empty());
  const auto& p = r.counterexamples.front().params;
  std::set<std::string> names;
  for (const auto& [k, v] : p) names.insert(k);
  EXPECT_EQ(names, (std::set<std::string>{"n", "m", "d", "a", "b"}));
  EXPECT_NE(r.counterexamples.front().expected, r.counterexamples.front().actual);
}

TEST(Verify, CounterexamplesAreCapped) {
  VerifyOptions opt;
  opt.wiener_override = [](int, int, int, int, int) -> std::int64_t { return 0; };
  opt.max_counterexamples = 3;
  const ClaimReport r = verify_claim("lemma8-consistency", 10, opt);
  EXPECT_EQ(r.counterexamples.size(), 3u);
  EXPECT_FALSE(r.notes.empty());
}

// Odd n >= 9 with maximum degree 4: the printed extremal set contains a
// graph of maximum degree 3, so the claim fails there and nowhere else.
TEST(Verify, Thm4FailsOnlyAtOddNineAndUp) {
  const ClaimReport at8 = verify_claim("thm4", 8);
  EXPECT_EQ(at8.status, ClaimStatus::Pass);
  const ClaimReport at10 = verify_claim("thm4", 10);
  ASSERT_EQ(at10.status, ClaimStatus::Fail);
  ASSERT_EQ(at10.counterexamples.size(), 1u);
  const auto& ce = at10.counterexamples.front();
  EXPECT_EQ(ce.params[0], (std::pair<std::string, std::string>{"n", "9"}));
  EXPECT_NE(ce.expected.find("U^1_{9,4,6}(2,2) is not in"), std::string::npos);
}

TEST(Verify, ParallelMatchesSerial) {
  VerifyOptions serial;
  serial.parallel = false;
  const auto a = verify_all(8);
  const auto b = verify_all(8, serial);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].range.points_checked, b[i].range.points_checked);
    EXPECT_EQ(a[i].status, b[i].status);
  }
}
