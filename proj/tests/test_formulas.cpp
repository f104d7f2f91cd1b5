#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unicyclic/error.hpp"
#include "unicyclic/families.hpp"
#include "unicyclic/formulas.hpp"

using namespace unicyclic;

namespace {

std::int64_t dd(const Graph& g) { return oracle::values(g).degree_distance; }
std::int64_t rdd(const Graph& g) {
  return oracle::values(g).reverse_degree_distance;
}
std::int64_t dd_diff(const GraphPair& p) { return dd(p.lhs) - dd(p.rhs); }
std::int64_t rdd_diff(const GraphPair& p) { return rdd(p.lhs) - rdd(p.rhs); }

template <class F>
void for_each_spec(int n_lo, int n_hi, F&& f) {
  for (int n = n_lo; n <= n_hi; ++n)
    for (int m = 3; m <= n - 1; ++m)
      for (int d = m / 2 + 1; d <= n - (m + 1) / 2; ++d) {
        const int s = d - m / 2;
        for (int b = 0; 2 * b <= s; ++b) f(FamilySpec{n, m, d, s - b, b, 0});
      }
}

}  // namespace

TEST(WienerClosed, Examples) {
  EXPECT_EQ(wiener_closed(5, 3, 3, 1, 1), 16);
  EXPECT_EQ(wiener_closed(6, 4, 4, 2, 0), 29);
  EXPECT_EQ(wiener_closed(6, 3, 3, 1, 1), 26);
}

TEST(WienerClosed, MatchesFloydWarshall) {
  for_each_spec(5, 11, [](const FamilySpec& s) {
    ASSERT_EQ(wiener_closed(s.n, s.m, s.d, s.a, s.b),
              oracle::values(build_U(s).graph).wiener)
        << s.to_string();
  });
}

TEST(WienerClosed, Domain) {
  EXPECT_THROW(wiener_closed(4, 3, 2, 1, 0), ParameterError);
  EXPECT_THROW(wiener_closed(6, 3, 3, 0, 2), ParameterError);
}

TEST(TransmissionClosed, Examples) {
  EXPECT_EQ(transmission_closed(TransmissionRole::V0, 5, 3, 3, 1, 1), 5);
  EXPECT_EQ(transmission_closed(TransmissionRole::U0, 6, 4, 4, 2, 0), 13);
  // b = 0: u_1 is v_{floor(m/2)}
  EXPECT_EQ(transmission_closed(TransmissionRole::U1, 9, 5, 5, 3, 0),
            transmission_closed(TransmissionRole::VHalf, 9, 5, 5, 3, 0));
}

TEST(TransmissionClosed, MatchesFloydWarshall) {
  const TransmissionRole roles[] = {TransmissionRole::V0, TransmissionRole::VHalf,
                                    TransmissionRole::Pendant, TransmissionRole::U0,
                                    TransmissionRole::U1};
  for_each_spec(5, 11, [&](const FamilySpec& s) {
    const FamilyGraph f = build_U(s);
    const auto dist = oracle::floyd_warshall(f.graph);
    for (TransmissionRole role : roles) {
      if (role == TransmissionRole::Pendant && s.h() == 0) {
        EXPECT_THROW(transmission_closed(role, s.n, s.m, s.d, s.a, s.b),
                     ParameterError);
        continue;
      }
      const Vertex v = f.landmark(landmark_name(role, s.m));
      std::int64_t total = 0;
      for (auto x : dist[v]) total += x;
      ASSERT_EQ(transmission_closed(role, s.n, s.m, s.d, s.a, s.b), total)
          << s.to_string() << " " << to_string(role);
    }
  });
}

TEST(DeltaLemma3, Examples) {
  EXPECT_EQ(delta_lemma3(0, 3, 4, 2), 0);
  EXPECT_EQ(delta_lemma3(1, 1, 3, 1), -10);
  EXPECT_EQ(delta_lemma3(2, 2, 4, 2), -40);
}

TEST(DeltaLemma3, RealizedPairs) {
  // C_3, path of 1 on v_0, path of 2 on v_1, one pendant
  const Lemma3Setting s{{3, 0, 1, 1, 2}, 1, 1};
  EXPECT_EQ(s.n1(), 3);
  EXPECT_EQ(s.n2(), 1);
  EXPECT_EQ(dd_diff(realize(s)), -10);
  for (int m = 3; m <= 6; ++m)
    for (int j = 1; j < m; ++j)
      for (int a = 1; a <= 2; ++a)
        for (int b = 2; b <= 4; ++b)
          for (int h = 1; h <= 2; ++h)
            for (int t = 1; t < b; ++t) {
              const Lemma3Setting x{{m, 0, j, a, b}, t, h};
              ASSERT_EQ(dd_diff(realize(x)), delta_lemma3(h, t, x.n1(), x.n2()));
            }
}

TEST(DeltaLemma4, Examples) {
  EXPECT_EQ(delta_lemma4(0, 2, 1, 2, 1, 1), 0);
  EXPECT_EQ(delta_lemma4(3, 2, 2, 2, 1, 1), 0);
  const Lemma4Setting s{{4, 0, 2, 2, 1}, 1, 1};
  const Lemma4Distances d = lemma4_distances(s);
  EXPECT_EQ(d.c, 2);
  EXPECT_EQ(d.t1, 1);
  EXPECT_EQ(d.t2, 1);
  EXPECT_EQ(dd_diff(realize(s)), delta_lemma4(1, 2, 1, d.c, d.t1, d.t2));
}

TEST(DeltaLemma4, RealizedPairs) {
  for (int m = 3; m <= 7; ++m)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int t = 0; t < m; ++t) {
          if (i == j || t == i) continue;
          for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 3; ++b) {
              const Lemma4Setting s{{m, i, j, a, b}, t, 2};
              const Lemma4Distances d = lemma4_distances(s);
              ASSERT_EQ(dd_diff(realize(s)), delta_lemma4(2, a, b, d.c, d.t1, d.t2));
            }
        }
}

TEST(DeltaLemma5, Examples) {
  EXPECT_EQ(delta_lemma5(2, 0, 1, 3), Rational(-6));
  EXPECT_EQ(delta_lemma5(3, 0, 0, 4), Rational(-12));
  EXPECT_EQ(dd(build_U({6, 3, 3, 1, 1, 0}).graph) - dd(build_U({6, 3, 3, 2, 0, 0}).graph),
            -6);
  EXPECT_EQ(dd(build_U({7, 4, 5, 2, 1, 0}).graph) - dd(build_U({7, 4, 5, 3, 0, 0}).graph),
            -12);
}

TEST(DeltaLemma5, VanishesAtTheTie) {
  // (14,6,6): alpha = 2, a - b = 3 and 2 + 1
  const FamilySpec s{14, 6, 6, 3, 0, 0};
  EXPECT_EQ(alpha(14, 6, 6), Rational(2));
  EXPECT_EQ(delta_lemma5(3, 0, s.h(), 6), Rational(0));
  EXPECT_EQ(dd(build_U({14, 6, 6, 2, 1, 0}).graph), dd(build_U(s).graph));
}

TEST(DeltaLemma5, RealizedPairs) {
  for (int m = 3; m <= 7; ++m)
    for (int a = 1; a <= 4; ++a)
      for (int b = 0; b <= a; ++b)
        for (int h = 0; h <= 3; ++h) {
          const Lemma5Setting s{m, a, b, h};
          ASSERT_EQ(Rational(dd_diff(realize(s))), delta_lemma5(a, b, h, m));
        }
}

TEST(DeltaLemma7, Examples) {
  EXPECT_EQ(delta_lemma7(1, 6), 46);
  EXPECT_EQ(rdd(build_U({6, 3, 4, 2, 1, 0}).graph), 134);
  EXPECT_EQ(rdd(build_U({6, 3, 3, 1, 1, 0}).graph), 88);
  EXPECT_EQ(delta_lemma7(2, 10), 128);
}

TEST(DeltaLemma7, MinimumOverRealGamma) {
  // 4g^2 - 2(2n-3)g + 2n^2 - 2n at g = (2n-3)/4 is n^2 + n - 9/4
  for (int n = 6; n <= 40; ++n) {
    const Rational g(2 * n - 3, 4);
    const Rational value = Rational(4) * g * g - Rational(2 * (2 * n - 3)) * g +
                           Rational(2 * n * n - 2 * n);
    EXPECT_EQ(value, Rational(n * n + n) - Rational(9, 4));
  }
}

TEST(DeltaLemma7, RealizedPairs) {
  bool saw_gamma2_n10 = false;
  for (int n = 6; n <= 11; ++n)
    for (int m = 3; m <= n - 2; ++m)
      for (int d = std::max(2, m / 2 + 1); d < n - (m + 1) / 2; ++d) {
        const Lemma7Setting s{n, m, d};
        const int gamma = lemma7_gamma(s);
        if (n == 10 && gamma == 2) saw_gamma2_n10 = true;
        ASSERT_EQ(rdd_diff(realize(s)), delta_lemma7(gamma, n));
      }
  EXPECT_TRUE(saw_gamma2_n10);
}

TEST(DeltaLemma10, Examples) {
  EXPECT_EQ(delta_lemma10(7, 5), 52);
  // d = n - floor((m+1)/2) forces diameters 4 and 5 here
  EXPECT_EQ(rdd(build_U({7, 3, 5, 4, 0, 0}).graph) - rdd(build_U({7, 5, 4, 2, 0, 0}).graph),
            52);
  EXPECT_THROW(delta_lemma10(7, 4), ParameterError);
}

TEST(DeltaLemma10, RealizedPairs) {
  for (int n = 6; n <= 14; ++n)
    for (int m = 5; m <= n - 1; ++m) {
      ASSERT_EQ(rdd_diff(realize(Lemma10Setting{n, m})), delta_lemma10(n, m));
    }
}

TEST(DeltaLemma11, RealizedPairs) {
  for (int n = 7; n <= 13; ++n)
    for (int m = 5; m <= n - 2; ++m)
      for (int d = std::max(3, m / 2 + 1); d <= n - (m + 1) / 2; ++d) {
        const int s = d - m / 2;
        for (int b = 0; 2 * b <= s; ++b) {
          const Lemma11Setting x{n, m, d, b};
          ASSERT_EQ(rdd_diff(realize(x)), delta_lemma11(n, m, x.h(), b));
        }
      }
}

TEST(RddClosed, Anchors) {
  EXPECT_EQ(rdd_closed(RddCase::I, 6), 130);
  EXPECT_EQ(rdd_closed(RddCase::V, 8, 2), rdd(build_U(rdd_family(RddCase::V, 8, 2)).graph));
  EXPECT_EQ(rdd_family(RddCase::V, 8, 2).d, 6);
}

TEST(RddClosed, MatchesFloydWarshall) {
  for (int n = 6; n <= 16; ++n) {
    for (RddCase c : {RddCase::I, RddCase::II}) {
      ASSERT_EQ(rdd_closed(c, n), rdd(build_U(rdd_family(c, n, 0)).graph));
    }
    if (n % 2 == 1) {
      ASSERT_EQ(rdd_closed(RddCase::III, n),
                rdd(build_U(rdd_family(RddCase::III, n, 0)).graph));
    } else {
      EXPECT_THROW(rdd_closed(RddCase::III, n), ParameterError);
    }
    for (int p = 2; p <= n - 2; ++p) {
      ASSERT_EQ(rdd_closed(RddCase::V, n, p),
                rdd(build_U(rdd_family(RddCase::V, n, p)).graph));
      if (p <= n - 3 && ((n - p) % 2 == 1 || p >= 4)) {
        ASSERT_EQ(rdd_closed(RddCase::IV, n, p),
                  rdd(build_U(rdd_family(RddCase::IV, n, p)).graph));
      }
    }
  }
}

TEST(RddClosed, CaseFourParityLabel) {
  // keyed on n: agrees when p is even, differs at (6,3)
  EXPECT_EQ(rdd_closed_iv_n_parity(10, 4), Rational(rdd_closed(RddCase::IV, 10, 4)));
  EXPECT_NE(rdd_closed_iv_n_parity(6, 3), Rational(rdd_closed(RddCase::IV, 6, 3)));
}

TEST(RddClosed, Domain) {
  EXPECT_THROW(rdd_closed(RddCase::I, 5), ParameterError);
  EXPECT_THROW(rdd_closed(RddCase::IV, 8, 2), ParameterError);
  EXPECT_THROW(rdd_closed(RddCase::V, 8, 7), ParameterError);
  EXPECT_EQ(parse_rdd_case("iv"), RddCase::IV);
}

TEST(FormulaRegistry, EvaluatesWithDirectValue) {
  const FormulaEvaluation e = evaluate_formula("rdd-closed-i", {{"n", 6}});
  EXPECT_EQ(e.value, 130);
  EXPECT_EQ(e.direct_value, 130);
  EXPECT_TRUE(e.match());
  const FormulaEvaluation w =
      evaluate_formula("wiener", {{"n", 6}, {"m", 4}, {"d", 4}, {"a", 2}, {"b", 0}});
  EXPECT_EQ(w.value, 29);
  EXPECT_TRUE(w.match());
  const FormulaEvaluation l7 =
      evaluate_formula("delta-lemma7", {{"n", 6}, {"m", 3}, {"d", 3}});
  EXPECT_EQ(l7.value, 46);
  EXPECT_TRUE(l7.match());
}

TEST(FormulaRegistry, RejectsBadParameters) {
  EXPECT_THROW(evaluate_formula("nope", {}), ParameterError);
  EXPECT_THROW(evaluate_formula("rdd-closed-i", {}), ParameterError);
  EXPECT_THROW(evaluate_formula("rdd-closed-i", {{"n", 6}, {"p", 1}}), ParameterError);
  EXPECT_THROW(evaluate_formula("rdd-closed-i", {{"n", 5}}), ParameterError);
}

TEST(FormulaRegistry, EveryEntryHasParams) {
  EXPECT_GE(formula_catalog().size(), 17u);
  for (const auto& f : formula_catalog()) {
    EXPECT_FALSE(f.params.empty()) << f.name;
    EXPECT_FALSE(f.description.empty()) << f.name;
  }
}
