#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unicyclic/canonical.hpp"
#include "unicyclic/class_filter.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/invariants.hpp"

namespace unicyclic {

inline constexpr int kDefaultCeiling = 11;

/// Rooted tree on 0..size-1 with root 0; parent[0] == -1 and
/// parent[v] < v otherwise.
struct RootedTree {
  std::vector<int> parent;

  std::size_t size() const { return parent.size(); }
};

/// One representative per isomorphism class of rooted trees with `size`
/// vertices, built by leaf addition and deduplicated on AHU strings.
const std::vector<RootedTree>& rooted_trees(int size);

/// AHU code of a rooted tree ("(" children-codes-sorted ")").
std::string ahu_code(const RootedTree& t);

enum class Strategy {
  Forest,    // cycle C_m with rooted trees hung from its vertices
  TreeEdge,  // a free tree plus one edge between non-adjacent vertices
};

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& text);

/// Free trees on n vertices up to isomorphism, sorted by canonical key.
/// Strategy::Forest forgets the root of every rooted tree; TreeEdge uses
/// an independent leaf-addition generator on free trees.
std::vector<Graph> enumerate_trees(int n, Strategy s = Strategy::Forest);

/// Connected graphs on n vertices up to isomorphism (1 <= n <= 8),
/// sorted by canonical key.
std::vector<Graph> enumerate_connected(int n);

struct EnumerateOptions {
  int ceiling = kDefaultCeiling;
  Strategy strategy = Strategy::Forest;
};

struct ClassMember {
  Graph graph;
  CanonicalKey key;
  InvariantReport report;
};

/// Unicyclic graphs on n vertices satisfying `filter`, one per
/// isomorphism class, sorted by canonical key. Requires 3 <= n <=
/// ceiling; throws ParameterError otherwise. Results are cached per
/// (n, strategy) and safe to request from several threads.
std::vector<ClassMember> enumerate_unicyclic(
    int n, const ClassFilter& filter = {},
    const EnumerateOptions& options = {});

struct Witness {
  CanonicalKey key;
  std::string graph6;  // of the enumerated representative

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ExtremalResult {
  int n = 0;
  ClassFilter filter;
  Objective objective = Objective::DegreeDistance;
  Direction direction = Direction::Min;
  std::optional<std::int64_t> optimum;  // empty iff the class is empty
  std::vector<Witness> witnesses;       // sorted by key
  std::size_t class_size = 0;

  bool empty_class() const { return class_size == 0; }
};

/// Exhaustive argmin/argmax with every tie reported.
ExtremalResult extremal_search(int n, const ClassFilter& filter,
                               Objective objective, Direction direction,
                               const EnumerateOptions& options = {});

}  // namespace unicyclic
