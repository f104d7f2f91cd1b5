#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "unicyclic/canonical.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/error.hpp"
#include "unicyclic/families.hpp"
#include "unicyclic/graph6.hpp"

using namespace unicyclic;

namespace {

std::set<CanonicalKey> keys(const std::vector<ClassMember>& members) {
  std::set<CanonicalKey> out;
  for (const auto& m : members) out.insert(m.key);
  return out;
}

}  // namespace

TEST(RootedTrees, Counts) {
  // rooted trees on 1..8 vertices
  const std::size_t expected[] = {1, 1, 2, 4, 9, 20, 48, 115};
  for (int s = 1; s <= 8; ++s) {
    EXPECT_EQ(rooted_trees(s).size(), expected[s - 1]) << s;
  }
}

TEST(RootedTrees, CodesDistinct) {
  std::set<std::string> codes;
  for (const RootedTree& t : rooted_trees(7)) codes.insert(ahu_code(t));
  EXPECT_EQ(codes.size(), rooted_trees(7).size());
}

TEST(Trees, CountsBothStrategies) {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(enumerate_trees(n, Strategy::Forest).size(), expected[n - 1]);
    EXPECT_EQ(enumerate_trees(n, Strategy::TreeEdge).size(), expected[n - 1]);
  }
}

TEST(Connected, Counts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_connected(n).size(), expected[n - 1]);
}

TEST(Unicyclic, Counts) {
  const std::size_t expected[] = {1, 2, 5, 13, 33, 89, 240, 657};
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(enumerate_unicyclic(n).size(), expected[n - 3]) << n;
  }
}

TEST(Unicyclic, StrategiesAgree) {
  for (int n = 3; n <= 9; ++n) {
    EXPECT_EQ(keys(enumerate_unicyclic(n, {}, {kDefaultCeiling, Strategy::Forest})),
              keys(enumerate_unicyclic(n, {}, {kDefaultCeiling, Strategy::TreeEdge})));
  }
}

TEST(Unicyclic, MatchesBruteForce) {
  for (int n = 3; n <= 6; ++n) {
    const auto brute = oracle::brute_unicyclic(n);
    const auto members = enumerate_unicyclic(n);
    ASSERT_EQ(members.size(), brute.size());
    for (const Graph& g : brute) {
      std::size_t hits = 0;
      for (const auto& m : members) hits += oracle::isomorphic(g, m.graph) ? 1 : 0;
      EXPECT_EQ(hits, 1u) << to_graph6(g);
    }
  }
}

TEST(Unicyclic, MembersAreWellFormed) {
  for (const ClassMember& m : enumerate_unicyclic(8)) {
    EXPECT_EQ(m.graph.edge_count(), 8u);
    EXPECT_TRUE(m.graph.is_connected());
    EXPECT_EQ(canonical_key(m.graph), m.key);
    EXPECT_TRUE(m.report.girth.has_value());
  }
}

TEST(Unicyclic, FilterSoundness) {
  const ClassFilter f{3, 3, {}, {}};
  const auto members = enumerate_unicyclic(6, f);
  EXPECT_FALSE(members.empty());
  for (const auto& m : members) {
    EXPECT_EQ(m.graph.edge_count(), 6u);
    EXPECT_EQ(unicyclic_girth(m.graph), 3u);
    EXPECT_EQ(oracle::values(m.graph).diameter, 3);
  }
  std::size_t in_class = 0;
  for (const auto& m : enumerate_unicyclic(6)) {
    in_class += (m.report.girth == 3u && m.report.diameter == 3) ? 1 : 0;
  }
  EXPECT_EQ(in_class, members.size());
}

TEST(Unicyclic, Ceiling) {
  EXPECT_THROW(enumerate_unicyclic(2), ParameterError);
  EXPECT_THROW(enumerate_unicyclic(12), ParameterError);
  EXPECT_THROW(enumerate_unicyclic(9, {}, {8, Strategy::Forest}), ParameterError);
  EXPECT_EQ(parse_strategy("tree-edge"), Strategy::TreeEdge);
  EXPECT_THROW(parse_strategy("orderly"), ParameterError);
}

TEST(ExtremalSearch, MinDegreeDistance) {
  const ExtremalResult r =
      extremal_search(6, {3, 3, {}, {}}, Objective::DegreeDistance, Direction::Min);
  ASSERT_TRUE(r.optimum.has_value());
  EXPECT_EQ(*r.optimum, 92);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].key, canonical_key(build_U({6, 3, 3, 1, 1, 0}).graph));
}

TEST(ExtremalSearch, MaxReverseDegreeDistanceGirthFour) {
  const ExtremalResult r = extremal_search(6, {4, {}, {}, {}},
                                           Objective::ReverseDegreeDistance, Direction::Max);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].key, canonical_key(build_U({6, 4, 4, 1, 1, 0}).graph));
}

TEST(ExtremalSearch, OptimumMatchesOracle) {
  for (auto dir : {Direction::Min, Direction::Max}) {
    const ExtremalResult r =
        extremal_search(8, {}, Objective::Wiener, dir);
    std::int64_t best = dir == Direction::Min ? INT64_MAX : INT64_MIN;
    for (const auto& m : enumerate_unicyclic(8)) {
      const auto w = oracle::values(m.graph).wiener;
      best = dir == Direction::Min ? std::min(best, w) : std::max(best, w);
    }
    EXPECT_EQ(*r.optimum, best);
  }
}

TEST(ExtremalSearch, EmptyClass) {
  const ExtremalResult r =
      extremal_search(6, {5, 5, {}, {}}, Objective::DegreeDistance, Direction::Min);
  EXPECT_TRUE(r.empty_class());
  EXPECT_FALSE(r.optimum.has_value());
  EXPECT_TRUE(r.witnesses.empty());
}
