#pragma once

#include <compare>
#include <span>
#include <string>

#include "unicyclic/graph.hpp"

namespace unicyclic {

/// Relabeling-invariant identifier of an isomorphism class.
///
/// The bytes are the graph6 text of the canonical relabeling, so a key is
/// also a valid graph6 line and two keys compare equal iff the graphs are
/// isomorphic.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string graph6) : bytes_(std::move(graph6)) {}

  const std::string& graph6() const { return bytes_; }

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string bytes_;
};

/// Exact canonical form: the lexicographically smallest graph6 string over
/// the leaves of an individualization/refinement search. The search tree
/// is seeded with (degree, transmission) colors on connected inputs, so
/// refinement only prunes and never decides.
CanonicalKey canonical_key(const Graph& g);

/// Same, for a vertex-colored graph: only color-preserving isomorphisms
/// identify two inputs. `colors` has one entry per vertex.
CanonicalKey canonical_key(const Graph& g, std::span<const int> colors);

/// A canonical relabeling: perm[v] is the canonical position of v.
std::vector<Vertex> canonical_labeling(const Graph& g,
                                       std::span<const int> colors = {});

}  // namespace unicyclic
