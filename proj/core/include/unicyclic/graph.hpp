#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace unicyclic {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on dense labels 0..n-1.
///
/// Construction only checks simplicity (no loops, no parallel edges).
/// Connectivity is checked by the invariant queries instead, so the
/// enumerators may hold disconnected intermediate states.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidGraph on a loop, a repeated edge or a label >= n.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Sorted neighbor labels.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool is_connected() const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Copy with `count` new pendant vertices attached to `v`; the new
  /// labels are order()..order()+count-1.
  Graph with_pendants(Vertex v, std::size_t count) const;
  /// Copy with one extra edge.
  Graph with_edge(Vertex u, Vertex v) const;
  /// Relabeled copy: vertex v becomes perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Common named graphs.
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

}  // namespace unicyclic
