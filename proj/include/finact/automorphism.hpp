#ifndef FINACT_AUTOMORPHISM_HPP
#define FINACT_AUTOMORPHISM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "finact/graph.hpp"

namespace finact {

/// One element of a group acting on a graph: a vertex permutation together
/// with a dart permutation. Maps carry no reference to their graph; the
/// operations that need one take it explicitly.
struct GraphMap {
  std::vector<VertexId> vertex_map;
  std::vector<DartId> dart_map;

  bool operator==(const GraphMap&) const = default;
  /// Orders by dart_map first, then vertex_map.
  bool operator<(const GraphMap& other) const {
    if (dart_map != other.dart_map) return dart_map < other.dart_map;
    return vertex_map < other.vertex_map;
  }
};

inline constexpr std::size_t kDefaultAutCap = 1'000'000;

/// A finite group of automorphisms of `graph`, sorted, identity first.
struct AutGroup {
  Graph graph;
  std::vector<GraphMap> elements;

  std::size_t order() const { return elements.size(); }
};

/// Throws PreconditionError when the permutation sizes do not match g.
bool is_automorphism(const Graph& g, const GraphMap& m);

GraphMap identity_map(const Graph& g);
/// a after b: compose(a, b)(x) = a(b(x)).
GraphMap compose(const GraphMap& a, const GraphMap& b);
GraphMap inverse(const GraphMap& a);

/// Full dart-level automorphism group. Throws CapExceeded when the group has
/// more than `cap` elements.
AutGroup automorphism_group(const Graph& g, std::size_t cap = kDefaultAutCap);

/// Edges whose two darts are swapped by m.
std::vector<EdgeId> inverted_edges(const GraphMap& m);

/// Fixed vertices and fixed edges of an inversion-free map. Throws
/// PreconditionError if m inverts an edge; subdivide first.
Subgraph fixed_subgraph(const Graph& g, const GraphMap& m);

/// The map induced on the barycentric subdivision.
GraphMap subdivided_map(const GraphMap& m, const Subdivision& sub);

/// Subgroup generated by `generators` (breadth-first). Throws
/// PreconditionError for non-automorphisms and CapExceeded past `cap`.
AutGroup closure(const Graph& g, const std::vector<GraphMap>& generators,
                 std::size_t cap = kDefaultAutCap);

std::string to_json(const GraphMap& m);

}  // namespace finact

#endif  // FINACT_AUTOMORPHISM_HPP
