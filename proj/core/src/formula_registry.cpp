#include <functional>
#include <limits>

#include "unicyclic/error.hpp"
#include "unicyclic/formulas.hpp"
#include "unicyclic/invariants.hpp"

namespace unicyclic {
namespace {

using Params = std::map<std::string, std::int64_t>;

struct Entry {
  FormulaInfo info;
  std::function<std::pair<std::int64_t, std::int64_t>(const Params&)> eval;
};

int arg(const Params& p, const std::string& key) {
  const std::int64_t v = p.at(key);
  if (v < std::numeric_limits<int>::min() / 4 ||
      v > std::numeric_limits<int>::max() / 4) {
    throw ParameterError("parameter " + key + " out of range");
  }
  return static_cast<int>(v);
}

std::int64_t rdd_difference(const GraphPair& g) {
  return reverse_degree_distance(g.lhs) - reverse_degree_distance(g.rhs);
}

std::int64_t dd_difference(const GraphPair& g) {
  return degree_distance(g.lhs) - degree_distance(g.rhs);
}

Entry transmission_entry(TransmissionRole role, const std::string& name,
                         const std::string& where) {
  return {{name, {"n", "m", "d", "a", "b"},
           "transmission of " + where + " in U_{n,m,d}(a,b)"},
          [role](const Params& p) {
            const int n = arg(p, "n"), m = arg(p, "m"), d = arg(p, "d"),
                      a = arg(p, "a"), b = arg(p, "b");
            const std::int64_t value = transmission_closed(role, n, m, d, a, b);
            const FamilyGraph g = build_U({n, m, d, a, b, 0});
            const Vertex v = g.landmark(landmark_name(role, m));
            return std::pair{value, transmission(g.graph, v)};
          }};
}

TwoPathCycle two_path(const Params& p) {
  return {arg(p, "m"), arg(p, "i"), arg(p, "j"), arg(p, "a"), arg(p, "b")};
}

Entry rdd_entry(RddCase c, bool uses_p) {
  std::vector<std::string> params{"n"};
  if (uses_p) params.push_back("p");
  return {{"rdd-closed-" + to_string(c), params,
           "reverse degree distance of " +
               std::string(uses_p ? "the family member for (n, p)"
                                  : "the family member for n") +
               ", closed form (" + to_string(c) + ")"},
          [c, uses_p](const Params& p) {
            const int n = arg(p, "n");
            const int pp = uses_p ? arg(p, "p") : 0;
            const std::int64_t value = rdd_closed(c, n, pp);
            const FamilyGraph g = build_U(rdd_family(c, n, pp));
            return std::pair{value, reverse_degree_distance(g.graph)};
          }};
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    t.push_back({{"wiener", {"n", "m", "d", "a", "b"},
                  "Wiener index of U_{n,m,d}(a,b)"},
                 [](const Params& p) {
                   const int n = arg(p, "n"), m = arg(p, "m"), d = arg(p, "d"),
                             a = arg(p, "a"), b = arg(p, "b");
                   const std::int64_t value = wiener_closed(n, m, d, a, b);
                   return std::pair{value,
                                    wiener(build_U({n, m, d, a, b, 0}).graph)};
                 }});
    t.push_back(transmission_entry(TransmissionRole::V0, "transmission-v0",
                                   "v_0"));
    t.push_back(transmission_entry(TransmissionRole::VHalf,
                                   "transmission-vhalf", "v_{floor(m/2)}"));
    t.push_back(transmission_entry(TransmissionRole::Pendant,
                                   "transmission-u", "a pendant vertex u"));
    t.push_back(transmission_entry(TransmissionRole::U0, "transmission-u0",
                                   "u_0"));
    t.push_back(transmission_entry(TransmissionRole::U1, "transmission-u1",
                                   "u_1"));
    t.push_back(
        {{"delta-lemma3", {"m", "i", "j", "a", "b", "t", "h"},
          "degree distance change when h pendants move from u_t to v_j"},
         [](const Params& p) {
           const Lemma3Setting s{two_path(p), arg(p, "t"), arg(p, "h")};
           const GraphPair g = realize(s);
           return std::pair{delta_lemma3(s.h, s.t, s.n1(), s.n2()),
                            dd_difference(g)};
         }});
    t.push_back(
        {{"delta-lemma4", {"m", "i", "j", "a", "b", "t", "h"},
          "degree distance change when h pendants move from v_t to v_i"},
         [](const Params& p) {
           const Lemma4Setting s{two_path(p), arg(p, "t"), arg(p, "h")};
           const GraphPair g = realize(s);
           const Lemma4Distances dist = lemma4_distances(s);
           return std::pair{delta_lemma4(s.h, s.base.a, s.base.b, dist.c,
                                         dist.t1, dist.t2),
                            dd_difference(g)};
         }});
    t.push_back({{"delta-lemma5", {"m", "a", "b", "h"},
                  "degree distance change from paths (a,b) to (a-1,b+1)"},
                 [](const Params& p) {
                   const Lemma5Setting s{arg(p, "m"), arg(p, "a"), arg(p, "b"),
                                         arg(p, "h")};
                   const GraphPair g = realize(s);
                   const std::int64_t value = to_integer(
                       delta_lemma5(s.a, s.b, s.h, s.m), "lemma 5 difference");
                   return std::pair{value, dd_difference(g)};
                 }});
    t.push_back(
        {{"delta-lemma7", {"n", "m", "d"},
          "reverse degree distance change from U_{n,m,d} to "
          "U_{n,m,d+1}(gamma+1,theta)"},
         [](const Params& p) {
           const Lemma7Setting s{arg(p, "n"), arg(p, "m"), arg(p, "d")};
           const GraphPair g = realize(s);
           return std::pair{delta_lemma7(lemma7_gamma(s), s.n),
                            rdd_difference(g)};
         }});
    t.push_back({{"delta-lemma10", {"n", "m"},
                  "reverse degree distance change from U_{n,m,d}(n-m,0) to "
                  "U_{n,m-2,d+1}(n-m+2,0), d = n - floor((m+1)/2)"},
                 [](const Params& p) {
                   const Lemma10Setting s{arg(p, "n"), arg(p, "m")};
                   const GraphPair g = realize(s);
                   return std::pair{delta_lemma10(s.n, s.m), rdd_difference(g)};
                 }});
    t.push_back({{"delta-lemma11", {"n", "m", "d", "b"},
                  "reverse degree distance change from U_{n,m,d}(a,b) to "
                  "U_{n,m-2,d+1}(a+1,b+1)"},
                 [](const Params& p) {
                   const Lemma11Setting s{arg(p, "n"), arg(p, "m"), arg(p, "d"),
                                          arg(p, "b")};
                   const GraphPair g = realize(s);
                   return std::pair{delta_lemma11(s.n, s.m, s.h(), s.b),
                                    rdd_difference(g)};
                 }});
    t.push_back(rdd_entry(RddCase::I, false));
    t.push_back(rdd_entry(RddCase::II, false));
    t.push_back(rdd_entry(RddCase::III, false));
    t.push_back(rdd_entry(RddCase::IV, true));
    t.push_back(rdd_entry(RddCase::V, true));
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<FormulaInfo>& formula_catalog() {
  static const std::vector<FormulaInfo> catalog = [] {
    std::vector<FormulaInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

FormulaEvaluation evaluate_formula(const std::string& name,
                                   const Params& params) {
  for (const Entry& e : entries()) {
    if (e.info.name != name) continue;
    for (const auto& key : e.info.params) {
      if (!params.count(key)) {
        throw ParameterError("formula " + name + ": missing parameter " + key);
      }
    }
    for (const auto& [key, value] : params) {
      bool known = false;
      for (const auto& k : e.info.params) known = known || k == key;
      if (!known) {
        throw ParameterError("formula " + name + ": unexpected parameter " +
                             key);
      }
    }
    const auto [value, direct] = e.eval(params);
    return {name, params, value, direct};
  }
  throw ParameterError("unknown formula '" + name + "'");
}

}  // namespace unicyclic
