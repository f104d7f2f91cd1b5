#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unicyclic/enumerate.hpp"
#include "unicyclic/families.hpp"
#include "unicyclic/formulas.hpp"
#include "unicyclic/invariants.hpp"
#include "unicyclic/verify.hpp"

namespace unicyclic {

// nlohmann::json hooks, found by ADL.
void to_json(nlohmann::json& j, const InvariantReport& r);  // girth null if absent
void to_json(nlohmann::json& j, const FamilySpec& s);
void to_json(nlohmann::json& j, const FamilyGraph& g);  // graph6 + landmarks
void to_json(nlohmann::json& j, const ClassFilter& f);
void to_json(nlohmann::json& j, const Witness& w);
void to_json(nlohmann::json& j, const ExtremalResult& r);
void to_json(nlohmann::json& j, const Counterexample& c);
void to_json(nlohmann::json& j, const ClaimReport& r);
void to_json(nlohmann::json& j, const FormulaEvaluation& e);

/// Column names of report_csv_row, in order.
std::string report_csv_header();
/// One CSV line (no newline) with the same values as the JSON object;
/// an absent girth is an empty field.
std::string report_csv_row(const InvariantReport& r);

}  // namespace unicyclic
