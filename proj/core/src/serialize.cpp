#include "unicyclic/serialize.hpp"

#include "unicyclic/graph6.hpp"

namespace unicyclic {

void to_json(nlohmann::json& j, const InvariantReport& r) {
  j = {{"n", r.n},
       {"edge_count", r.edge_count},
       {"girth", r.girth ? nlohmann::json(*r.girth) : nlohmann::json(nullptr)},
       {"diameter", r.diameter},
       {"pendant_count", r.pendant_count},
       {"max_degree", r.max_degree},
       {"wiener", r.wiener},
       {"degree_distance", r.degree_distance},
       {"reverse_degree_distance", r.reverse_degree_distance},
       {"first_zagreb", r.first_zagreb},
       {"schultz", r.schultz}};
}

void to_json(nlohmann::json& j, const FamilySpec& s) {
  j = {{"n", s.n}, {"m", s.m}, {"d", s.d}, {"a", s.a},
       {"b", s.b}, {"k", s.k}, {"h", s.h()}, {"name", s.to_string()}};
}

void to_json(nlohmann::json& j, const FamilyGraph& g) {
  nlohmann::json marks = nlohmann::json::object();
  for (const auto& [name, v] : g.landmarks) marks[name] = v;
  j = {{"graph6", to_graph6(g.graph)}, {"landmarks", marks}};
}

void to_json(nlohmann::json& j, const ClassFilter& f) {
  j = nlohmann::json::object();
  if (f.girth) j["girth"] = *f.girth;
  if (f.diameter) j["diameter"] = *f.diameter;
  if (f.pendant_count) j["pendant_count"] = *f.pendant_count;
  if (f.max_degree) j["max_degree"] = *f.max_degree;
}

void to_json(nlohmann::json& j, const Witness& w) {
  j = {{"key", w.key.graph6()}, {"graph6", w.graph6}};
}

void to_json(nlohmann::json& j, const ExtremalResult& r) {
  j = {{"n", r.n},
       {"filter", r.filter},
       {"objective", to_string(r.objective)},
       {"direction", to_string(r.direction)},
       {"optimum",
        r.optimum ? nlohmann::json(*r.optimum) : nlohmann::json(nullptr)},
       {"empty_class", r.empty_class()},
       {"class_size", r.class_size},
       {"witnesses", r.witnesses}};
}

void to_json(nlohmann::json& j, const Counterexample& c) {
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [k, v] : c.params) p[k] = v;
  j = {{"params", p},
       {"expected", c.expected},
       {"actual", c.actual},
       {"witnesses", c.witnesses}};
}

void to_json(nlohmann::json& j, const ClaimReport& r) {
  j = {{"id", r.id},
       {"description", r.description},
       {"kind", to_string(r.kind)},
       {"status", to_string(r.status)},
       {"range",
        {{"n_min", r.range.n_min},
         {"n_max", r.range.n_max},
         {"points_checked", r.range.points_checked},
         {"grid", r.range.grid},
         {"skipped", r.range.skipped}}},
       {"counterexamples", r.counterexamples},
       {"notes", r.notes},
       {"wall_seconds", r.wall_seconds}};
}

void to_json(nlohmann::json& j, const FormulaEvaluation& e) {
  j = {{"formula", e.formula},
       {"params", e.params},
       {"value", e.value},
       {"direct_value", e.direct_value},
       {"match", e.match()}};
}

std::string report_csv_header() {
  return "n,edge_count,girth,diameter,pendant_count,max_degree,wiener,"
         "degree_distance,reverse_degree_distance,first_zagreb,schultz";
}

std::string report_csv_row(const InvariantReport& r) {
  auto s = [](auto v) { return std::to_string(v); };
  return s(r.n) + "," + s(r.edge_count) + "," +
         (r.girth ? s(*r.girth) : std::string{}) + "," + s(r.diameter) + "," +
         s(r.pendant_count) + "," + s(r.max_degree) + "," + s(r.wiener) + "," +
         s(r.degree_distance) + "," + s(r.reverse_degree_distance) + "," +
         s(r.first_zagreb) + "," + s(r.schultz);
}

}  // namespace unicyclic
