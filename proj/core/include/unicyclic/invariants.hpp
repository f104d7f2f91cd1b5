#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unicyclic/graph.hpp"

namespace unicyclic {

/// All distance- and degree-based invariants of one connected graph.
///
/// Two counts that the literature both calls "m" are kept apart here:
/// `edge_count` enters the reverse degree distance, `girth` is the cycle
/// length.
struct InvariantReport {
  std::size_t n = 0;
  std::size_t edge_count = 0;
  std::optional<std::size_t> girth;  // set iff edge_count == n
  std::int64_t diameter = 0;
  std::size_t pendant_count = 0;
  std::size_t max_degree = 0;
  std::int64_t wiener = 0;
  std::int64_t degree_distance = 0;
  std::int64_t reverse_degree_distance = 0;
  std::int64_t first_zagreb = 0;
  std::int64_t schultz = 0;

  friend bool operator==(const InvariantReport&,
                         const InvariantReport&) = default;
};

/// BFS distances from `source`. Throws InvalidGraph for a bad label and
/// NotConnected if some vertex is unreachable.
std::vector<std::int64_t> distances(const Graph& g, Vertex source);

/// D_G(u): sum of distances from u.
std::int64_t transmission(const Graph& g, Vertex u);

/// Row-major n*n distance matrix; throws NotConnected.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const { return n_; }
  std::int64_t operator()(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::int64_t transmission(Vertex u) const { return transmissions_[u]; }
  std::int64_t diameter() const { return diameter_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> dist_;
  std::vector<std::int64_t> transmissions_;
  std::int64_t diameter_ = 0;
};

std::int64_t wiener(const Graph& g);
std::int64_t degree_distance(const Graph& g);
/// 2(n-1) * edge_count * diameter - D'(G).
std::int64_t reverse_degree_distance(const Graph& g);
std::int64_t first_zagreb(const Graph& g);
std::int64_t schultz(const Graph& g);
std::int64_t diameter(const Graph& g);
std::size_t pendant_count(const Graph& g);
std::size_t max_degree(const Graph& g);

/// Length of the unique cycle, found by repeatedly deleting degree-1
/// vertices. Empty unless edge_count == n. Throws NotConnected.
std::optional<std::size_t> unicyclic_girth(const Graph& g);

/// Vertices of the unique cycle (empty for non-unicyclic input), in cycle
/// order starting from the smallest label.
std::vector<Vertex> unique_cycle(const Graph& g);

InvariantReport structural_profile(const Graph& g);

/// Reverse degree distance of a tree through its Wiener index:
/// 4[(n-1)^2 d / 2 - W] + n(n-1). Throws ParameterError for non-trees.
std::int64_t tree_reverse_degree_distance(const Graph& g);

}  // namespace unicyclic
