#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "unicyclic/families.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/rational.hpp"

namespace unicyclic {

// Closed forms for U_{n,m,d}(a,b) = U^0_{n,m,d}(a,b) with h = n - d -
// floor((m+1)/2). Every evaluator works in exact rationals and throws
// InternalError rather than round a non-integer result.

/// Wiener index of U_{n,m,d}(a,b). Binomials C(x,3), C(x,2) vanish for
/// x < 3 resp. x < 2. Requires n >= 5 and a valid family spec.
std::int64_t wiener_closed(int n, int m, int d, int a, int b);

enum class TransmissionRole {
  V0,      // v_0
  VHalf,   // v_{floor(m/2)}
  Pendant, // a pendant vertex on v_0 (needs h >= 1)
  U0,      // end of the path on v_0
  U1,      // end of the path on v_{floor(m/2)}, or v_{floor(m/2)} if b = 0
};

std::string to_string(TransmissionRole role);
/// The landmark name used by build_U for this role.
std::string landmark_name(TransmissionRole role, int m);

/// Transmission of the landmark vertex `role` in U_{n,m,d}(a,b).
std::int64_t transmission_closed(TransmissionRole role, int n, int m, int d,
                                 int a, int b);

/// 2ht[2(n2 - n1) - 1]: moving h pendants from u_t (t steps down a hanging
/// path) to the path's cycle vertex.
std::int64_t delta_lemma3(std::int64_t h, std::int64_t t, std::int64_t n1,
                          std::int64_t n2);

/// 4h[b(c - t2) - a t1]: moving h pendants from cycle vertex v_t to v_i.
std::int64_t delta_lemma4(std::int64_t h, std::int64_t a, std::int64_t b,
                          std::int64_t c, std::int64_t t1, std::int64_t t2);

/// D'(U(a-1,b+1)) - D'(U(a,b)) =
/// 4[(1-a+b)(h + floor((m-1)/2) + 1/2) + h floor(m/2)].
Rational delta_lemma5(int a, int b, int h, int m);

/// rD'(U_{n,m,d+1}(gamma+1,theta)) - rD'(U_{n,m,d}(gamma,theta)) =
/// 4 gamma^2 - 2(2n-3) gamma + 2n^2 - 2n.
std::int64_t delta_lemma7(std::int64_t gamma, std::int64_t n);

/// rD'(U_{n,m-2,d+1}(a+2,0)) - rD'(U_{n,m,d}(a,0)) with d = n -
/// floor((m+1)/2), a = n - m. Requires 5 <= m <= n-1.
std::int64_t delta_lemma10(int n, int m);

/// rD'(U_{n,m-2,d+1}(a+1,b+1)) - rD'(U_{n,m,d}(a,b)), with d and a
/// determined by (n, m, h, b). Requires 5 <= m <= n-2.
std::int64_t delta_lemma11(int n, int m, int h, int b);

/// The five reverse-degree-distance polynomials for the extremal graphs of
/// the pendant and maximum-degree classes.
enum class RddCase {
  I,    // U_{n,4,n-2}(n-4,0)
  II,   // U_{n,4,n-2}, parity of n
  III,  // U_{n,4,n-3}, odd n
  IV,   // U_{n,4,n-p}, parity of n-p; n-p odd or p >= 4
  V,    // U_{n,3,n-p}, parity of n-p
};

std::string to_string(RddCase c);
RddCase parse_rdd_case(const std::string& text);

/// The family member whose reverse degree distance rdd_closed describes.
FamilySpec rdd_family(RddCase c, int n, int p);

/// Evaluates the polynomial. `p` is ignored for cases I-III. Throws
/// ParameterError outside the case's domain (including wrong parity).
std::int64_t rdd_closed(RddCase c, int n, int p = 0);

/// Case IV exactly as displayed for rD', whose parity label reads "n even /
/// n odd". Kept to measure where that label disagrees with direct
/// computation; rdd_closed(RddCase::IV, ...) keys on n-p instead.
Rational rdd_closed_iv_n_parity(int n, int p);

// ---------------------------------------------------------------------
// Realizations. Each difference formula has a builder producing the two
// graphs whose invariant difference (lhs - rhs) it claims to equal.

struct GraphPair {
  Graph lhs;
  Graph rhs;
};

/// Cycle C_m with a path of a vertices on v_i and a path u_1..u_b on v_j.
struct TwoPathCycle {
  int m = 3;
  int i = 0;
  int j = 1;
  int a = 1;
  int b = 2;
};

FamilyGraph build_two_path_cycle(const TwoPathCycle& shape);

/// h pendants on v_j (lhs) versus on u_t (rhs), 1 <= t <= b-1.
struct Lemma3Setting {
  TwoPathCycle base;
  int t = 1;
  int h = 1;

  int n1() const { return base.a + base.m - 1; }
  int n2() const { return base.b - t; }
};
GraphPair realize(const Lemma3Setting& s);

/// h pendants on v_i (lhs) versus on v_t (rhs), t != i.
struct Lemma4Setting {
  TwoPathCycle base;
  int t = 1;
  int h = 1;
};
struct Lemma4Distances {
  int c = 0;   // d(v_i, v_j)
  int t1 = 0;  // d(v_i, v_t)
  int t2 = 0;  // d(v_j, v_t)
};
Lemma4Distances lemma4_distances(const Lemma4Setting& s);
GraphPair realize(const Lemma4Setting& s);

/// The branched cycles with paths (a-1, b+1) (lhs) and (a, b) (rhs) and h
/// pendants on v_0.
struct Lemma5Setting {
  int m = 3;
  int a = 1;
  int b = 0;
  int h = 0;
};
GraphPair realize(const Lemma5Setting& s);

/// U_{n,m,d+1}(gamma+1,theta) (lhs) versus U_{n,m,d}(gamma,theta) (rhs),
/// with (gamma, theta) = gamma_theta(n,m,d).
struct Lemma7Setting {
  int n = 6;
  int m = 3;
  int d = 3;
};
GraphPair realize(const Lemma7Setting& s);
int lemma7_gamma(const Lemma7Setting& s);

struct Lemma10Setting {
  int n = 6;
  int m = 5;
};
GraphPair realize(const Lemma10Setting& s);

struct Lemma11Setting {
  int n = 7;
  int m = 5;
  int d = 3;
  int b = 0;

  int h() const { return n - d - (m + 1) / 2; }
  int a() const { return d - m / 2 - b; }
};
GraphPair realize(const Lemma11Setting& s);

// ---------------------------------------------------------------------
// Named registry, for evaluating any formula against direct computation.

struct FormulaInfo {
  std::string name;
  std::vector<std::string> params;
  std::string description;
};

struct FormulaEvaluation {
  std::string formula;
  std::map<std::string, std::int64_t> params;
  std::int64_t value = 0;
  std::int64_t direct_value = 0;
  bool match() const { return value == direct_value; }
};

const std::vector<FormulaInfo>& formula_catalog();

/// Throws ParameterError for unknown names, missing or unexpected params.
FormulaEvaluation evaluate_formula(
    const std::string& name, const std::map<std::string, std::int64_t>& params);

}  // namespace unicyclic
