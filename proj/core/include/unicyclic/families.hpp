#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unicyclic/class_filter.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/rational.hpp"

namespace unicyclic {

/// Parameters of U^k_{n,m,d}(a,b): the cycle C_m = v_0 ... v_{m-1} with a
/// path of a vertices hung from v_0, a path of b vertices hung from
/// v_{floor(m/2)}, and h = n - d - floor((m+1)/2) pendant vertices on v_k.
struct FamilySpec {
  int n = 0;
  int m = 0;  // girth
  int d = 0;  // diameter
  int a = 0;
  int b = 0;
  int k = 0;

  int h() const { return n - d - (m + 1) / 2; }

  /// Throws ParameterError naming the first violated constraint:
  /// 3 <= m <= n-1, a >= 1, a >= b >= 0, a + b = d - floor(m/2),
  /// h >= 0, 0 <= k <= floor(m/4).
  void validate() const;

  std::string to_string() const;  // "U^k_{n,m,d}(a,b)"

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

using Landmarks = std::vector<std::pair<std::string, Vertex>>;

/// A realized graph with the names of its distinguished vertices:
/// "v0".."v{m-1}", "u0" (end of the v_0 path), "u1" (end of the other path,
/// or v_{floor(m/2)} when that path is empty) and "u" (first pendant, when
/// any pendant exists).
struct FamilyGraph {
  Graph graph;
  Landmarks landmarks;

  /// Throws ParameterError when the landmark is not realized.
  Vertex landmark(std::string_view name) const;
  bool has_landmark(std::string_view name) const;
};

/// Cycle with two hanging paths and a pendant bundle, without the family's
/// arithmetic constraints. Used to realize the transformations whose two
/// sides leave the a >= b convention (e.g. moving u_0 across the cycle).
struct BranchedCycle {
  int m = 3;
  int path_at_v0 = 0;
  int path_at_half = 0;  // hung from v_{floor(m/2)}
  int pendants = 0;
  int pendant_at = 0;    // cycle index receiving the pendants
};

FamilyGraph build_branched_cycle(const BranchedCycle& shape);

/// Realizes U^k_{n,m,d}(a,b). Throws ParameterError on invalid specs and
/// InternalError if the realized order, girth or diameter disagree.
FamilyGraph build_U(const FamilySpec& spec);

/// Checks 3 <= m <= n-1 and floor(m/2)+1 <= d <= n - floor((m+1)/2).
void validate_nmd(int n, int m, int d);

/// alpha(n,m,d) = h floor(m/2) / (n - d - 1/2), held as
/// 2 h floor(m/2) / (2(n-d) - 1).
Rational alpha(int n, int m, int d);

/// (gamma, theta): gamma + theta = d - floor(m/2), gamma - theta the
/// largest value of the right parity that is <= alpha + 1 (and <= the sum).
std::pair<int, int> gamma_theta(int n, int m, int d);

/// U^k_{n,m,d} = U^k_{n,m,d}(gamma, theta).
FamilySpec standard_spec(int n, int m, int d, int k = 0);

enum class ClassKind {
  GirthDiameter,  // unicyclic, n vertices, girth m, diameter d
  Girth,          // unicyclic, n vertices, girth m
  Pendants,       // unicyclic, n vertices, p pendant vertices
  MaxDegree,      // unicyclic, n vertices, maximum degree Delta
};

/// A claimed extremal set for one class and objective.
struct ExtremalClaim {
  ClassKind kind = ClassKind::GirthDiameter;
  int n = 0;
  ClassFilter filter;
  Objective objective = Objective::DegreeDistance;
  Direction direction = Direction::Min;
  std::string case_label;  // which case of the statement applied
  std::vector<FamilySpec> specs;

  std::string class_name() const;
};

/// Minimum degree distance over unicyclic graphs with given n, girth and
/// diameter: n >= 6, 3 <= m <= n-2, max(3, floor(m/2)+1) <= d <=
/// n - floor((m+1)/2). Specs realizing isomorphic graphs are reported once.
ExtremalClaim minimizer_set(int n, int m, int d);

/// Maximum reverse degree distance over unicyclic graphs of girth m:
/// n >= 6, 3 <= m <= n-2.
ExtremalClaim maximizer_set_girth(int n, int m);

/// Maximum reverse degree distance with p pendant vertices: n >= 6,
/// 1 <= p <= n-3 (p = n-3 is the triangle-with-pendants special entry).
ExtremalClaim maximizer_set_pendants(int n, int p);

/// Maximum reverse degree distance with maximum degree Delta: n >= 6,
/// 3 <= Delta <= n-1 (n-2 and n-1 are special entries).
ExtremalClaim maximizer_set_maxdeg(int n, int max_degree);

}  // namespace unicyclic
