#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "unicyclic/invariants.hpp"

namespace unicyclic {

/// Conjunction of optional structural constraints on a unicyclic graph.
struct ClassFilter {
  std::optional<std::size_t> girth;
  std::optional<std::int64_t> diameter;
  std::optional<std::size_t> pendant_count;
  std::optional<std::size_t> max_degree;

  bool matches(const InvariantReport& r) const {
    return (!girth || r.girth == girth) &&
           (!diameter || r.diameter == *diameter) &&
           (!pendant_count || r.pendant_count == *pendant_count) &&
           (!max_degree || r.max_degree == *max_degree);
  }

  /// e.g. "girth=4,diameter=6"; "any" when empty.
  std::string describe() const;

  friend bool operator==(const ClassFilter&, const ClassFilter&) = default;
};

enum class Objective { DegreeDistance, ReverseDegreeDistance, Wiener };
enum class Direction { Min, Max };

std::int64_t objective_value(const InvariantReport& r, Objective objective);
std::string to_string(Objective objective);
std::string to_string(Direction direction);
/// Accepts "dd"/"degree_distance", "rdd"/"reverse_degree_distance",
/// "w"/"wiener". Throws ParameterError.
Objective parse_objective(const std::string& text);
Direction parse_direction(const std::string& text);

}  // namespace unicyclic
