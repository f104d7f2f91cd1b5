#include "unicyclic/families.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "unicyclic/canonical.hpp"
#include "unicyclic/error.hpp"
#include "unicyclic/invariants.hpp"

namespace unicyclic {
namespace {

std::string nmd(int n, int m, int d) {
  return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) +
         ", d=" + std::to_string(d) + ")";
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

// Drops specs whose realized graphs are isomorphic to an earlier entry.
std::vector<FamilySpec> dedupe_isomorphic(std::vector<FamilySpec> specs) {
  std::vector<FamilySpec> out;
  std::set<CanonicalKey> seen;
  for (const auto& spec : specs) {
    if (seen.insert(canonical_key(build_U(spec).graph)).second) {
      out.push_back(spec);
    }
  }
  return out;
}

}  // namespace

void FamilySpec::validate() const {
  const std::string where = " in " + to_string();
  require(m >= 3, "girth m >= 3 violated" + where);
  require(m <= n - 1, "m <= n-1 violated" + where);
  require(a >= 1, "a >= 1 violated" + where);
  require(b >= 0, "b >= 0 violated" + where);
  require(a >= b, "a >= b violated" + where);
  require(a + b == d - m / 2, "a + b = d - floor(m/2) violated" + where);
  require(h() >= 0, "d <= n - floor((m+1)/2) violated (h < 0)" + where);
  require(k >= 0 && k <= m / 4, "0 <= k <= floor(m/4) violated" + where);
}

std::string FamilySpec::to_string() const {
  return "U^" + std::to_string(k) + "_{" + std::to_string(n) + "," +
         std::to_string(m) + "," + std::to_string(d) + "}(" +
         std::to_string(a) + "," + std::to_string(b) + ")";
}

Vertex FamilyGraph::landmark(std::string_view name) const {
  for (const auto& [key, v] : landmarks) {
    if (key == name) return v;
  }
  throw ParameterError("landmark '" + std::string(name) +
                       "' is not realized in this graph");
}

bool FamilyGraph::has_landmark(std::string_view name) const {
  return std::any_of(landmarks.begin(), landmarks.end(),
                     [&](const auto& kv) { return kv.first == name; });
}

FamilyGraph build_branched_cycle(const BranchedCycle& shape) {
  require(shape.m >= 3, "cycle length >= 3 violated");
  require(shape.path_at_v0 >= 0 && shape.path_at_half >= 0 &&
              shape.pendants >= 0,
          "branch sizes must be non-negative");
  require(shape.pendant_at >= 0 && shape.pendant_at < shape.m,
          "pendant cycle index out of range");

  const auto m = static_cast<Vertex>(shape.m);
  const auto half = static_cast<Vertex>(shape.m / 2);
  std::vector<Edge> edges;
  FamilyGraph out;
  for (Vertex i = 0; i < m; ++i) {
    edges.emplace_back(i, (i + 1) % m);
    out.landmarks.emplace_back("v" + std::to_string(i), i);
  }
  Vertex next = m;
  auto hang_path = [&](Vertex root, int length) {
    Vertex prev = root;
    for (int i = 0; i < length; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    return prev;
  };
  out.landmarks.emplace_back("u0", hang_path(0, shape.path_at_v0));
  out.landmarks.emplace_back("u1", hang_path(half, shape.path_at_half));
  for (int i = 0; i < shape.pendants; ++i) {
    if (i == 0) out.landmarks.emplace_back("u", next);
    edges.emplace_back(static_cast<Vertex>(shape.pendant_at), next++);
  }
  out.graph = Graph(next, edges);
  return out;
}

FamilyGraph build_U(const FamilySpec& spec) {
  spec.validate();
  FamilyGraph out = build_branched_cycle(
      {spec.m, spec.a, spec.b, spec.h(), spec.k});
  const auto report = structural_profile(out.graph);
  if (report.n != static_cast<std::size_t>(spec.n) ||
      report.edge_count != report.n ||
      report.girth != static_cast<std::size_t>(spec.m) ||
      report.diameter != spec.d) {
    throw InternalError("realized " + spec.to_string() +
                        " does not have the requested n, girth and diameter");
  }
  return out;
}

void validate_nmd(int n, int m, int d) {
  require(m >= 3, "girth m >= 3 violated" + nmd(n, m, d));
  require(m <= n - 1, "m <= n-1 violated" + nmd(n, m, d));
  require(d >= m / 2 + 1, "d >= floor(m/2)+1 violated" + nmd(n, m, d));
  require(d <= n - (m + 1) / 2,
          "d <= n - floor((m+1)/2) violated" + nmd(n, m, d));
}

Rational alpha(int n, int m, int d) {
  validate_nmd(n, m, d);
  const std::int64_t h = n - d - (m + 1) / 2;
  return Rational(2 * h * (m / 2), 2 * (n - d) - 1);
}

std::pair<int, int> gamma_theta(int n, int m, int d) {
  const Rational cap = alpha(n, m, d) + 1;
  const int sum = d - m / 2;
  int diff = sum;
  while (Rational(diff) > cap) diff -= 2;
  return {(sum + diff) / 2, (sum - diff) / 2};
}

FamilySpec standard_spec(int n, int m, int d, int k) {
  const auto [gamma, theta] = gamma_theta(n, m, d);
  return FamilySpec{n, m, d, gamma, theta, k};
}

std::string ExtremalClaim::class_name() const {
  const std::string ns = std::to_string(n);
  switch (kind) {
    case ClassKind::GirthDiameter:
      return "U(" + ns + "," + std::to_string(filter.girth.value_or(0)) + "," +
             std::to_string(filter.diameter.value_or(0)) + ")";
    case ClassKind::Girth:
      return "unicyclic(n=" + ns +
             ",girth=" + std::to_string(filter.girth.value_or(0)) + ")";
    case ClassKind::Pendants:
      return "U_p(" + ns + "," +
             std::to_string(filter.pendant_count.value_or(0)) + ")";
    case ClassKind::MaxDegree:
      return "U_Delta(" + ns + "," +
             std::to_string(filter.max_degree.value_or(0)) + ")";
  }
  return {};
}

ExtremalClaim minimizer_set(int n, int m, int d) {
  require(n >= 6, "n >= 6 violated" + nmd(n, m, d));
  require(m >= 3 && m <= n - 2, "3 <= m <= n-2 violated" + nmd(n, m, d));
  require(d >= 3, "d >= 3 violated" + nmd(n, m, d));
  validate_nmd(n, m, d);

  ExtremalClaim claim;
  claim.kind = ClassKind::GirthDiameter;
  claim.n = n;
  claim.filter.girth = static_cast<std::size_t>(m);
  claim.filter.diameter = d;
  claim.objective = Objective::DegreeDistance;
  claim.direction = Direction::Min;

  const Rational a = alpha(n, m, d);
  const int sum = d - m / 2;
  const bool sum_even = sum % 2 == 0;
  const auto [gamma, theta] = gamma_theta(n, m, d);
  const int beta = sum / 2;
  std::vector<FamilySpec> specs;
  auto balanced_all_k = [&] {
    for (int k = 0; k <= m / 4; ++k) {
      specs.push_back({n, m, d, beta, beta, k});
    }
  };

  if (a > Rational(0) && a < Rational(1) && sum_even) {
    claim.case_label = "i";
    balanced_all_k();
  } else if (a == Rational(1) && sum_even) {
    claim.case_label = "ii";
    specs.push_back({n, m, d, beta + 1, beta - 1, 0});
    balanced_all_k();
  } else if (a > Rational(1) && is_integer(a) &&
             (a.numerator() % 2 != 0) == sum_even) {
    // The tie needs gamma - theta = alpha + 1; when the split total caps
    // gamma - theta below that, (gamma-1, theta+1) is not a minimizer.
    specs.push_back({n, m, d, gamma, theta, 0});
    if (Rational(gamma - theta) == a + 1) {
      claim.case_label = "iii";
      specs.push_back({n, m, d, gamma - 1, theta + 1, 0});
    } else {
      claim.case_label = "iii-capped";
    }
  } else {
    claim.case_label = "iv";
    specs.push_back({n, m, d, gamma, theta, 0});
  }
  claim.specs = dedupe_isomorphic(std::move(specs));
  return claim;
}

ExtremalClaim maximizer_set_girth(int n, int m) {
  require(n >= 6, "n >= 6 violated");
  require(m >= 3 && m <= n - 2, "3 <= m <= n-2 violated");
  ExtremalClaim claim;
  claim.kind = ClassKind::Girth;
  claim.n = n;
  claim.filter.girth = static_cast<std::size_t>(m);
  claim.objective = Objective::ReverseDegreeDistance;
  claim.direction = Direction::Max;
  claim.case_label = "thm2";
  claim.specs = {standard_spec(n, m, n - (m + 1) / 2)};
  return claim;
}

namespace {

// Shared trichotomy of the pendant and maximum-degree statements: compare
// floor(gap/2) with (n+4)/6 in integers.
std::vector<FamilySpec> girth3_vs_girth4(int n, int gap, int d,
                                         std::string& label) {
  const int lhs6 = 6 * (gap / 2);
  if (lhs6 > n + 4) {
    label += ">";
    return {standard_spec(n, 4, d)};
  }
  if (lhs6 == n + 4) {
    label += "=";
    return {standard_spec(n, 3, d), standard_spec(n, 4, d)};
  }
  label += "<";
  return {standard_spec(n, 3, d)};
}

}  // namespace

ExtremalClaim maximizer_set_pendants(int n, int p) {
  require(n >= 6, "n >= 6 violated");
  require(p >= 1, "p >= 1 violated (p = 0 is the cycle C_n alone)");
  require(p <= n - 3, "p <= n-3 violated");
  ExtremalClaim claim;
  claim.kind = ClassKind::Pendants;
  claim.n = n;
  claim.filter.pendant_count = static_cast<std::size_t>(p);
  claim.objective = Objective::ReverseDegreeDistance;
  claim.direction = Direction::Max;

  if (p == 1) {
    claim.case_label = "i";
    claim.specs = {FamilySpec{n, 4, n - 2, n - 4, 0, 0}};
  } else if (p == 2) {
    claim.case_label = "ii";
    claim.specs = {standard_spec(n, 4, n - 2)};
  } else if (p == n - 3) {
    claim.case_label = "p=n-3";
    claim.specs = {standard_spec(n, 3, 3)};
  } else if (p == 3 && n == 7) {
    claim.case_label = "iii";
    claim.specs = {standard_spec(7, 3, 4)};
  } else if (p == 3 && n % 2 == 1) {
    claim.case_label = "iv";
    claim.specs = {standard_spec(n, 4, n - 3, 0), standard_spec(n, 4, n - 3, 1)};
  } else {
    claim.case_label = "v";
    claim.specs = girth3_vs_girth4(n, n - p - 1, n - p, claim.case_label);
  }
  claim.specs = dedupe_isomorphic(std::move(claim.specs));
  return claim;
}

ExtremalClaim maximizer_set_maxdeg(int n, int max_degree) {
  const int delta = max_degree;
  require(n >= 6, "n >= 6 violated");
  require(delta >= 3,
          "Delta >= 3 violated (Delta = 2 is the cycle C_n alone)");
  require(delta <= n - 1, "Delta <= n-1 violated");
  ExtremalClaim claim;
  claim.kind = ClassKind::MaxDegree;
  claim.n = n;
  claim.filter.max_degree = static_cast<std::size_t>(delta);
  claim.objective = Objective::ReverseDegreeDistance;
  claim.direction = Direction::Max;

  if (delta == n - 1) {
    claim.case_label = "Delta=n-1";
    claim.specs = {FamilySpec{n, 3, 2, 1, 0, 0}};
  } else if (delta == n - 2) {
    claim.case_label = "Delta=n-2";
    claim.specs = {standard_spec(n, 3, 3)};
  } else if (delta == 3) {
    claim.case_label = "i";
    claim.specs = {standard_spec(n, 4, n - 2)};
  } else if (delta == 4 && n == 7) {
    claim.case_label = "ii";
    claim.specs = {standard_spec(7, 3, 4)};
  } else if (delta == 4 && n % 2 == 1) {
    claim.case_label = "iii";
    claim.specs = {standard_spec(n, 4, n - 3, 0), standard_spec(n, 4, n - 3, 1)};
  } else {
    claim.case_label = "iv";
    claim.specs =
        girth3_vs_girth4(n, n - delta, n - delta + 1, claim.case_label);
  }
  claim.specs = dedupe_isomorphic(std::move(claim.specs));
  return claim;
}

}  // namespace unicyclic
