#include "unicyclic/formulas.hpp"

#include <cstdlib>
#include <string>

#include "unicyclic/error.hpp"
#include "unicyclic/invariants.hpp"

namespace unicyclic {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

std::int64_t choose2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }
std::int64_t choose3(std::int64_t x) {
  return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6;
}

Rational half(std::int64_t x) { return Rational(x, 2); }

FamilySpec checked_family(int n, int m, int d, int a, int b) {
  require(n >= 5, "n >= 5 violated");
  FamilySpec spec{n, m, d, a, b, 0};
  spec.validate();
  return spec;
}

int cycle_distance(int m, int x, int y) {
  const int diff = std::abs(x - y);
  return std::min(diff, m - diff);
}

}  // namespace

std::int64_t wiener_closed(int n, int m, int d, int a, int b) {
  const FamilySpec spec = checked_family(n, m, d, a, b);
  const std::int64_t h = spec.h();
  const std::int64_t q = static_cast<std::int64_t>(m) * m / 4;  // floor(m^2/4)
  const std::int64_t half_m = m / 2;
  const std::int64_t A = a;
  const std::int64_t B = b;

  Rational w = Rational(2 * (A + B) + m, 2) * q;
  w += choose3(A + 1) + choose3(B + 1);
  w += static_cast<std::int64_t>(m) * (choose2(A + 1) + choose2(B + 1));
  w += half(A * B * (2 * half_m + A + B + 2));
  w += h * (q + m + half(A * (A + 3)) + half(B * (2 * half_m + B + 3)));
  w += h * (h - 1);
  return to_integer(w, "Wiener closed form at " + spec.to_string());
}

std::string to_string(TransmissionRole role) {
  switch (role) {
    case TransmissionRole::V0:
      return "v0";
    case TransmissionRole::VHalf:
      return "vhalf";
    case TransmissionRole::Pendant:
      return "u";
    case TransmissionRole::U0:
      return "u0";
    case TransmissionRole::U1:
      return "u1";
  }
  return {};
}

std::string landmark_name(TransmissionRole role, int m) {
  if (role == TransmissionRole::VHalf) return "v" + std::to_string(m / 2);
  return to_string(role);
}

std::int64_t transmission_closed(TransmissionRole role, int n, int m, int d,
                                 int a, int b) {
  const FamilySpec spec = checked_family(n, m, d, a, b);
  const std::int64_t h = spec.h();
  const std::int64_t q = static_cast<std::int64_t>(m) * m / 4;
  const std::int64_t M = m / 2;
  const std::int64_t A = a;
  const std::int64_t B = b;

  Rational t;
  switch (role) {
    case TransmissionRole::V0:
      t = q + half(A * (A + 1)) + half(B * (B + 1 + 2 * M)) + h;
      break;
    case TransmissionRole::VHalf:
      t = q + half(A * (A + 1 + 2 * M)) + half(B * (B + 1)) + h * (1 + M);
      break;
    case TransmissionRole::Pendant:
      require(h >= 1, "role u needs a pendant vertex (h >= 1) in " +
                          spec.to_string());
      t = q + m + half(A * (A + 3)) + half(B * (2 * M + B + 3)) + 2 * (h - 1);
      break;
    case TransmissionRole::U0:
      t = q + A * (half(A - 1) + m) + half(B * (2 * A + 2 * M + B + 1)) +
          h * (A + 1);
      break;
    case TransmissionRole::U1:
      t = q + B * (half(B - 1) + m) + half(A * (2 * B + 2 * M + A + 1)) +
          h * (B + M + 1);
      break;
  }
  return to_integer(t, "transmission closed form (" + to_string(role) +
                           ") at " + spec.to_string());
}

std::int64_t delta_lemma3(std::int64_t h, std::int64_t t, std::int64_t n1,
                          std::int64_t n2) {
  require(h >= 0, "h >= 0 violated");
  require(t >= 1, "t >= 1 violated");
  return 2 * h * t * (2 * (n2 - n1) - 1);
}

std::int64_t delta_lemma4(std::int64_t h, std::int64_t a, std::int64_t b,
                          std::int64_t c, std::int64_t t1, std::int64_t t2) {
  require(h >= 0 && a >= 0 && b >= 0 && c >= 0 && t1 >= 0 && t2 >= 0,
          "lemma 4 parameters must be non-negative");
  return 4 * h * (b * (c - t2) - a * t1);
}

Rational delta_lemma5(int a, int b, int h, int m) {
  require(a >= 1, "a >= 1 violated");
  require(b >= 0 && a >= b, "a >= b >= 0 violated");
  require(h >= 0, "h >= 0 violated");
  require(m >= 3, "m >= 3 violated");
  const Rational bracket =
      Rational(1 - a + b) * (Rational(h + (m - 1) / 2) + Rational(1, 2)) +
      Rational(static_cast<std::int64_t>(h) * (m / 2));
  const Rational value = 4 * bracket;
  to_integer(value, "lemma 5 difference");
  return value;
}

std::int64_t delta_lemma7(std::int64_t gamma, std::int64_t n) {
  require(gamma >= 1, "gamma >= 1 violated");
  require(n >= 6, "n >= 6 violated");
  return 4 * gamma * gamma - 2 * (2 * n - 3) * gamma + 2 * n * n - 2 * n;
}

std::int64_t delta_lemma10(int n, int m) {
  require(m >= 5 && m <= n - 1, "5 <= m <= n-1 violated");
  const std::int64_t N = n;
  const std::int64_t M = m;
  return 6 * M * M - 2 * (2 * N + 7) * M - 4 * (M * M / 4) + 2 * N * N +
         4 * N + 10;
}

std::int64_t delta_lemma11(int n, int m, int h, int b) {
  require(m >= 5 && m <= n - 2, "5 <= m <= n-2 violated");
  require(h >= 0 && b >= 0, "h >= 0 and b >= 0 violated");
  const int d = n - h - (m + 1) / 2;
  const int a = d - m / 2 - b;
  require(d >= 3, "d >= 3 violated");
  require(a >= 1 && a >= b, "a >= max(b, 1) violated");

  const std::int64_t N = n;
  const std::int64_t M = m;
  const std::int64_t H = h;
  const std::int64_t B = b;
  const std::int64_t half_m = m / 2;
  const Rational value =
      Rational(4 * B * B - 4 * (N - M - 2 * H) * B + 2 * N * N) -
      4 * N * (Rational(half_m + H) + Rational(1, 2)) +
      Rational(2 * M * M + 8 * M * H + 4 * (M - 1) * (half_m - 1) -
               4 * (M * M / 4) + 4 * H * H - 6 * H);
  return to_integer(value, "lemma 11 difference");
}

std::string to_string(RddCase c) {
  switch (c) {
    case RddCase::I:
      return "i";
    case RddCase::II:
      return "ii";
    case RddCase::III:
      return "iii";
    case RddCase::IV:
      return "iv";
    case RddCase::V:
      return "v";
  }
  return {};
}

RddCase parse_rdd_case(const std::string& text) {
  if (text == "i") return RddCase::I;
  if (text == "ii") return RddCase::II;
  if (text == "iii") return RddCase::III;
  if (text == "iv") return RddCase::IV;
  if (text == "v") return RddCase::V;
  throw ParameterError("unknown closed-form case '" + text + "'");
}

namespace {

void check_rdd_domain(RddCase c, int n, int p) {
  require(n >= 6, "n >= 6 violated");
  switch (c) {
    case RddCase::I:
    case RddCase::II:
      break;
    case RddCase::III:
      require(n % 2 == 1, "case iii needs odd n");
      break;
    case RddCase::IV:
      require(p >= 2 && p <= n - 3, "case iv needs 2 <= p <= n-3");
      require((n - p) % 2 == 1 || p >= 4,
              "case iv needs n-p odd or p >= 4 (other (n,p) belong to cases "
              "ii/iii)");
      break;
    case RddCase::V:
      require(p >= 2 && p <= n - 2, "case v needs 2 <= p <= n-2");
      break;
  }
}

Rational cube_term(std::int64_t n) { return Rational(4, 3) * n * n * n; }

}  // namespace

FamilySpec rdd_family(RddCase c, int n, int p) {
  check_rdd_domain(c, n, p);
  switch (c) {
    case RddCase::I:
      return FamilySpec{n, 4, n - 2, n - 4, 0, 0};
    case RddCase::II:
      return standard_spec(n, 4, n - 2);
    case RddCase::III:
      return standard_spec(n, 4, n - 3);
    case RddCase::IV:
      return standard_spec(n, 4, n - p);
    case RddCase::V:
      return standard_spec(n, 3, n - p);
  }
  return {};
}

std::int64_t rdd_closed(RddCase c, int n, int p) {
  check_rdd_domain(c, n, p);
  const std::int64_t N = n;
  const std::int64_t P = p;
  Rational v;
  switch (c) {
    case RddCase::I:
      v = cube_term(N) - 6 * N * N + Rational(47, 3) * N - 36;
      break;
    case RddCase::II:
      v = cube_term(N) - Rational(9, 2) * N * N + Rational(11, 3) * N -
          (N % 2 == 0 ? Rational(12) : Rational(27, 2));
      break;
    case RddCase::III:
      v = cube_term(N) - Rational(11, 2) * N * N + Rational(8, 3) * N -
          Rational(47, 2);
      break;
    case RddCase::IV: {
      v = cube_term(N) - (P + Rational(5, 2)) * N * N -
          (P - Rational(17, 3)) * N - Rational(P * P * P, 3) +
          Rational(P * P, 2);
      if ((N - P) % 2 == 0) {
        v -= Rational(11 * P, 3) + 10;
      } else {
        v -= Rational(14 * P, 3) + Rational(7, 2);
      }
      break;
    }
    case RddCase::V: {
      v = cube_term(N) - (P + Rational(5, 2)) * N * N -
          (P - Rational(11, 3)) * N - Rational(P * P * P, 3) +
          Rational(P * P, 2);
      if ((N - P) % 2 == 0) {
        v -= Rational(2 * P, 3);
      } else {
        v += -Rational(5 * P, 3) + Rational(7, 2);
      }
      break;
    }
  }
  return to_integer(v, "closed form (" + to_string(c) + ") at n=" +
                           std::to_string(n) + ", p=" + std::to_string(p));
}

Rational rdd_closed_iv_n_parity(int n, int p) {
  check_rdd_domain(RddCase::IV, n, p);
  const std::int64_t N = n;
  const std::int64_t P = p;
  Rational v = cube_term(N) - (P + Rational(5, 2)) * N * N -
               (P - Rational(17, 3)) * N - Rational(P * P * P, 3) +
               Rational(P * P, 2);
  if (N % 2 == 0) {
    v -= Rational(11 * P, 3) + 10;
  } else {
    v -= Rational(14 * P, 3) + Rational(7, 2);
  }
  return v;
}

// ---------------------------------------------------------------------

FamilyGraph build_two_path_cycle(const TwoPathCycle& s) {
  require(s.m >= 3, "m >= 3 violated");
  require(s.i >= 0 && s.i < s.m && s.j >= 0 && s.j < s.m,
          "cycle indices out of range");
  require(s.i != s.j, "i != j violated");
  require(s.a >= 0 && s.b >= 0, "path lengths must be non-negative");

  const auto m = static_cast<Vertex>(s.m);
  std::vector<Edge> edges;
  FamilyGraph out;
  for (Vertex x = 0; x < m; ++x) {
    edges.emplace_back(x, (x + 1) % m);
    out.landmarks.emplace_back("v" + std::to_string(x), x);
  }
  Vertex next = m;
  Vertex prev = static_cast<Vertex>(s.i);
  for (int x = 1; x <= s.a; ++x) {
    edges.emplace_back(prev, next);
    out.landmarks.emplace_back("w" + std::to_string(x), next);
    prev = next++;
  }
  prev = static_cast<Vertex>(s.j);
  for (int x = 1; x <= s.b; ++x) {
    edges.emplace_back(prev, next);
    out.landmarks.emplace_back("u" + std::to_string(x), next);
    prev = next++;
  }
  out.graph = Graph(next, edges);
  return out;
}

GraphPair realize(const Lemma3Setting& s) {
  require(s.base.a >= 1, "a >= 1 violated");
  require(s.base.b >= 2, "b >= 2 violated");
  require(s.t >= 1 && s.t <= s.base.b - 1, "1 <= t <= b-1 violated");
  require(s.h >= 0, "h >= 0 violated");
  const FamilyGraph g = build_two_path_cycle(s.base);
  const auto h = static_cast<std::size_t>(s.h);
  return {g.graph.with_pendants(g.landmark("v" + std::to_string(s.base.j)), h),
          g.graph.with_pendants(g.landmark("u" + std::to_string(s.t)), h)};
}

Lemma4Distances lemma4_distances(const Lemma4Setting& s) {
  const int m = s.base.m;
  return {cycle_distance(m, s.base.i, s.base.j),
          cycle_distance(m, s.base.i, s.t), cycle_distance(m, s.base.j, s.t)};
}

GraphPair realize(const Lemma4Setting& s) {
  require(s.t >= 0 && s.t < s.base.m, "t out of range");
  require(s.t != s.base.i, "t != i violated");
  require(s.h >= 0, "h >= 0 violated");
  const FamilyGraph g = build_two_path_cycle(s.base);
  const auto h = static_cast<std::size_t>(s.h);
  return {g.graph.with_pendants(static_cast<Vertex>(s.base.i), h),
          g.graph.with_pendants(static_cast<Vertex>(s.t), h)};
}

GraphPair realize(const Lemma5Setting& s) {
  require(s.a >= 1, "a >= 1 violated");
  require(s.b >= 0 && s.a >= s.b, "a >= b >= 0 violated");
  return {build_branched_cycle({s.m, s.a - 1, s.b + 1, s.h, 0}).graph,
          build_branched_cycle({s.m, s.a, s.b, s.h, 0}).graph};
}

int lemma7_gamma(const Lemma7Setting& s) {
  return gamma_theta(s.n, s.m, s.d).first;
}

GraphPair realize(const Lemma7Setting& s) {
  require(s.d < s.n - (s.m + 1) / 2, "d < n - floor((m+1)/2) violated");
  const auto [gamma, theta] = gamma_theta(s.n, s.m, s.d);
  return {build_U({s.n, s.m, s.d + 1, gamma + 1, theta, 0}).graph,
          build_U({s.n, s.m, s.d, gamma, theta, 0}).graph};
}

GraphPair realize(const Lemma10Setting& s) {
  require(s.m >= 5 && s.m <= s.n - 1, "5 <= m <= n-1 violated");
  const int d = s.n - (s.m + 1) / 2;
  const int a = s.n - s.m;
  return {build_U({s.n, s.m - 2, d + 1, a + 2, 0, 0}).graph,
          build_U({s.n, s.m, d, a, 0, 0}).graph};
}

GraphPair realize(const Lemma11Setting& s) {
  require(s.m >= 5 && s.m <= s.n - 2, "5 <= m <= n-2 violated");
  const int a = s.a();
  return {build_U({s.n, s.m - 2, s.d + 1, a + 1, s.b + 1, 0}).graph,
          build_U({s.n, s.m, s.d, a, s.b, 0}).graph};
}

}  // namespace unicyclic
