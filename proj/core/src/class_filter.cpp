#include "unicyclic/class_filter.hpp"

#include "unicyclic/error.hpp"

namespace unicyclic {

std::string ClassFilter::describe() const {
  std::string out;
  auto add = [&](const char* name, auto value) {
    if (!out.empty()) out += ",";
    out += name;
    out += "=";
    out += std::to_string(value);
  };
  if (girth) add("girth", *girth);
  if (diameter) add("diameter", *diameter);
  if (pendant_count) add("pendants", *pendant_count);
  if (max_degree) add("max_degree", *max_degree);
  return out.empty() ? "any" : out;
}

std::int64_t objective_value(const InvariantReport& r, Objective objective) {
  switch (objective) {
    case Objective::DegreeDistance:
      return r.degree_distance;
    case Objective::ReverseDegreeDistance:
      return r.reverse_degree_distance;
    case Objective::Wiener:
      return r.wiener;
  }
  return 0;
}

std::string to_string(Objective objective) {
  switch (objective) {
    case Objective::DegreeDistance:
      return "degree_distance";
    case Objective::ReverseDegreeDistance:
      return "reverse_degree_distance";
    case Objective::Wiener:
      return "wiener";
  }
  return {};
}

std::string to_string(Direction direction) {
  return direction == Direction::Min ? "min" : "max";
}

Objective parse_objective(const std::string& text) {
  if (text == "dd" || text == "degree_distance") {
    return Objective::DegreeDistance;
  }
  if (text == "rdd" || text == "reverse_degree_distance") {
    return Objective::ReverseDegreeDistance;
  }
  if (text == "w" || text == "wiener") return Objective::Wiener;
  throw ParameterError("unknown objective '" + text +
                       "' (expected dd, rdd or wiener)");
}

Direction parse_direction(const std::string& text) {
  if (text == "min") return Direction::Min;
  if (text == "max") return Direction::Max;
  throw ParameterError("unknown direction '" + text +
                       "' (expected min or max)");
}

}  // namespace unicyclic
