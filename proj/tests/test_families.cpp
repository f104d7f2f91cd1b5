#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "unicyclic/canonical.hpp"
#include "unicyclic/error.hpp"
#include "unicyclic/families.hpp"
#include "unicyclic/invariants.hpp"

using namespace unicyclic;

namespace {

std::set<std::string> names(const ExtremalClaim& c) {
  std::set<std::string> out;
  for (const auto& s : c.specs) out.insert(s.to_string());
  return out;
}

}  // namespace

TEST(BuildU, Examples) {
  EXPECT_EQ(degree_distance(build_U({6, 3, 3, 1, 1, 0}).graph), 92);
  const Graph g = build_U({6, 4, 4, 2, 0, 0}).graph;
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(degree_distance(g), 110);
  EXPECT_EQ(reverse_degree_distance(g), 130);
  EXPECT_EQ(wiener(build_U({5, 3, 3, 1, 1, 0}).graph), 16);
}

TEST(BuildU, RealizesRequestedShape) {
  for (int n = 4; n <= 12; ++n) {
    for (int m = 3; m <= n - 1; ++m) {
      for (int d = m / 2 + 1; d <= n - (m + 1) / 2; ++d) {
        const int s = d - m / 2;
        for (int b = 0; 2 * b <= s; ++b) {
          for (int k = 0; k <= m / 4; ++k) {
            const FamilySpec spec{n, m, d, s - b, b, k};
            const FamilyGraph f = build_U(spec);
            const oracle::Values o = oracle::values(f.graph);
            ASSERT_EQ(f.graph.order(), static_cast<std::size_t>(n));
            ASSERT_EQ(f.graph.edge_count(), static_cast<std::size_t>(n));
            ASSERT_EQ(o.diameter, d) << spec.to_string();
            ASSERT_EQ(unicyclic_girth(f.graph), static_cast<std::size_t>(m));
            // pendants sit on v_k and the two paths end at u0, u1
            const auto deg = oracle::degrees(f.graph);
            if (spec.h() > 0) {
              ASSERT_EQ(deg[f.landmark("u")], 1);
            }
            ASSERT_EQ(oracle::floyd_warshall(f.graph)[f.landmark("v0")][f.landmark("u0")],
                      s - b);
          }
        }
      }
    }
  }
}

TEST(BuildU, RejectsInvalidSpecs) {
  EXPECT_THROW(build_U({6, 2, 3, 1, 1, 0}), ParameterError);
  EXPECT_THROW(build_U({6, 3, 3, 0, 2, 0}), ParameterError);
  EXPECT_THROW(build_U({6, 3, 3, 2, 1, 0}), ParameterError);
  EXPECT_THROW(build_U({6, 3, 5, 4, 0, 0}), ParameterError);
  EXPECT_THROW(build_U({8, 4, 4, 1, 1, 2}), ParameterError);
  try {
    build_U({6, 4, 4, 1, 0, 0});
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find("a + b = d - floor(m/2)"), std::string::npos);
  }
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(6, 3, 3), Rational(2, 5));
  EXPECT_EQ(alpha(6, 3, 4), Rational(0));
  EXPECT_EQ(alpha(10, 4, 5), Rational(4, 3));
  EXPECT_THROW(alpha(6, 3, 1), ParameterError);
}

TEST(GammaTheta, Examples) {
  EXPECT_EQ(gamma_theta(6, 3, 3), std::make_pair(1, 1));
  EXPECT_EQ(gamma_theta(6, 3, 4), std::make_pair(2, 1));
  EXPECT_EQ(gamma_theta(10, 4, 5), std::make_pair(2, 1));
}

TEST(GammaTheta, Rule) {
  for (int n = 5; n <= 30; ++n) {
    for (int m = 3; m <= n - 1; ++m) {
      for (int d = m / 2 + 1; d <= n - (m + 1) / 2; ++d) {
        const auto [g, t] = gamma_theta(n, m, d);
        const int sum = d - m / 2;
        const Rational cap = alpha(n, m, d) + Rational(1);
        ASSERT_EQ(g + t, sum);
        ASSERT_GE(g, t);
        ASSERT_GE(t, 0);
        ASSERT_LE(Rational(g - t), cap);
        // the next larger value of the same parity is excluded
        ASSERT_TRUE(g - t + 2 > sum || Rational(g - t + 2) > cap);
      }
    }
  }
}

TEST(MinimizerSet, Examples) {
  const ExtremalClaim c = minimizer_set(6, 3, 3);
  EXPECT_EQ(c.case_label, "i");
  EXPECT_EQ(names(c), std::set<std::string>{"U^0_{6,3,3}(1,1)"});
  const ExtremalClaim h0 = minimizer_set(6, 3, 4);
  EXPECT_EQ(h0.case_label, "iv");
  EXPECT_EQ(names(h0), std::set<std::string>{"U^0_{6,3,4}(2,1)"});
  const ExtremalClaim c10 = minimizer_set(10, 4, 5);
  EXPECT_EQ(c10.case_label, "iv");
  EXPECT_EQ(names(c10), std::set<std::string>{"U^0_{10,4,5}(2,1)"});
}

TEST(MinimizerSet, TieOnlyWhenReachable) {
  const ExtremalClaim tie = minimizer_set(14, 6, 6);
  EXPECT_EQ(tie.case_label, "iii");
  EXPECT_EQ(tie.specs.size(), 2u);
  const ExtremalClaim capped = minimizer_set(12, 6, 4);
  EXPECT_EQ(capped.case_label, "iii-capped");
  EXPECT_EQ(names(capped), std::set<std::string>{"U^0_{12,6,4}(1,0)"});
}

TEST(MinimizerSet, CaseOneListsEveryBalancedPlacement) {
  // alpha(7,4,4) = 4/5, sum 2
  const ExtremalClaim c = minimizer_set(7, 4, 4);
  EXPECT_EQ(c.case_label, "i");
  EXPECT_EQ(names(c),
            (std::set<std::string>{"U^0_{7,4,4}(1,1)", "U^1_{7,4,4}(1,1)"}));
}

TEST(MinimizerSet, Domain) {
  EXPECT_THROW(minimizer_set(5, 3, 3), ParameterError);
  EXPECT_THROW(minimizer_set(6, 5, 3), ParameterError);
  EXPECT_THROW(minimizer_set(8, 3, 2), ParameterError);
}

TEST(MaximizerGirth, Examples) {
  EXPECT_EQ(names(maximizer_set_girth(6, 3)), std::set<std::string>{"U^0_{6,3,4}(2,1)"});
  EXPECT_EQ(names(maximizer_set_girth(6, 4)), std::set<std::string>{"U^0_{6,4,4}(1,1)"});
  const ExtremalClaim c = maximizer_set_girth(10, 5);
  ASSERT_EQ(c.specs.size(), 1u);
  EXPECT_EQ(c.specs[0].d, 7);
}

TEST(MaximizerPendants, Examples) {
  const auto p73 = maximizer_set_pendants(7, 3);
  ASSERT_EQ(p73.specs.size(), 1u);
  EXPECT_EQ(p73.specs[0].m, 3);
  EXPECT_EQ(p73.specs[0].d, 4);
  const auto p103 = maximizer_set_pendants(10, 3);
  ASSERT_EQ(p103.specs.size(), 1u);
  EXPECT_EQ(p103.specs[0].m, 4);
  EXPECT_EQ(p103.specs[0].d, 7);
  const auto p62 = maximizer_set_pendants(6, 2);
  ASSERT_EQ(p62.specs.size(), 1u);
  EXPECT_EQ(p62.specs[0].m, 4);
  EXPECT_EQ(p62.specs[0].d, 4);
  EXPECT_THROW(maximizer_set_pendants(6, 0), ParameterError);
}

TEST(MaximizerMaxDegree, Examples) {
  for (int n = 6; n <= 12; ++n) {
    const auto c = maximizer_set_maxdeg(n, 3);
    ASSERT_EQ(c.specs.size(), 1u);
    EXPECT_EQ(c.specs[0].m, 4);
    EXPECT_EQ(c.specs[0].d, n - 2);
  }
  const auto c74 = maximizer_set_maxdeg(7, 4);
  ASSERT_EQ(c74.specs.size(), 1u);
  EXPECT_EQ(c74.specs[0].m, 3);
  EXPECT_EQ(c74.specs[0].d, 4);
  EXPECT_THROW(maximizer_set_maxdeg(7, 2), ParameterError);
}

// The registry keeps the printed set for odd n >= 9, Delta = 4. One of its
// two members has maximum degree 3, so the claim cannot hold as printed.
TEST(MaximizerMaxDegree, PrintedSetHasMemberOutsideClass) {
  const auto c = maximizer_set_maxdeg(9, 4);
  EXPECT_EQ(c.case_label, "iii");
  EXPECT_EQ(names(c),
            (std::set<std::string>{"U^0_{9,4,6}(2,2)", "U^1_{9,4,6}(2,2)"}));
  EXPECT_EQ(max_degree(build_U({9, 4, 6, 2, 2, 0}).graph), 4u);
  EXPECT_EQ(max_degree(build_U({9, 4, 6, 2, 2, 1}).graph), 3u);
  EXPECT_NE(canonical_key(build_U({9, 4, 6, 2, 2, 0}).graph),
            canonical_key(build_U({9, 4, 6, 2, 2, 1}).graph));
}
