#ifndef FINACT_HOMOLOGY_HPP
#define FINACT_HOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "finact/automorphism.hpp"
#include "finact/graph.hpp"
#include "finact/int_matrix.hpp"

namespace finact {

/// Integer 1-chain: one coefficient per edge, with edge k oriented along
/// dart 2k.
using Chain = std::vector<std::int64_t>;

/// Basis of H_1 from a spanning tree (or forest). Basis cycle i is cotree
/// edge i followed by the tree path from its head back to its tail, so a
/// cycle's coordinates are exactly its cotree coefficients.
struct CycleBasis {
  Graph graph;
  std::vector<EdgeId> tree_edges;    // ascending
  std::vector<EdgeId> cotree_edges;  // basis order
  std::vector<Chain> cycles;

  int rank() const { return static_cast<int>(cotree_edges.size()); }
  /// Basis coordinates of a cycle.
  std::vector<std::int64_t> coordinates(const Chain& cycle) const;
};

/// Breadth-first tree from vertex 0, darts in identifier order. Throws
/// PreconditionError if g is disconnected.
std::vector<EdgeId> spanning_tree(const Graph& g);

/// Basis from spanning_tree with cotree edges in identifier order.
CycleBasis cycle_basis(const Graph& g);

/// Basis from an explicit spanning tree and cotree ordering. Throws
/// PreconditionError if `tree` is not a spanning tree of a connected g or
/// `cotree_order` is not a permutation of the remaining edges.
CycleBasis cycle_basis(const Graph& g, std::vector<EdgeId> tree, std::vector<EdgeId> cotree_order);

/// Basis from a breadth-first spanning forest; accepts disconnected graphs.
CycleBasis forest_cycle_basis(const Graph& g);

/// Image of a chain under the chain map induced by m.
Chain push_chain(const GraphMap& m, const Chain& chain);

/// Matrix of m on H_1 in basis b; column i holds the image of cycle i.
/// Throws PreconditionError if m is not an automorphism of b.graph.
IntMatrix homology_matrix(const CycleBasis& b, const GraphMap& m);

/// 1 - trace on H_1. Requires a connected graph.
std::int64_t lefschetz_number(const CycleBasis& b, const GraphMap& m);

struct HopfCheck {
  std::int64_t lefschetz = 0;
  int chi_fixed = 0;
  bool equal = false;
  bool subdivided = false;
};

/// Lefschetz number of m against the Euler characteristic of its fixed
/// subgraph, taken on the barycentric subdivision when m inverts an edge.
HopfCheck hopf_check(const Graph& g, const GraphMap& m);

/// Elements of G acting as the identity on H_1.
AutGroup homology_kernel(const CycleBasis& b, const AutGroup& group);

struct PropositionVerdict {
  bool connected = false;
  int genus = 0;  // cycle rank when disconnected
  bool has_free_edges = false;
  std::size_t kernel_order = 0;
  bool holds = false;
  std::optional<GraphMap> witness;  // smallest nontrivial kernel element

  bool hypotheses_hold() const { return connected && genus >= 2 && !has_free_edges; }
  /// Hypotheses hold but the kernel is nontrivial.
  bool is_violation() const { return hypotheses_hold() && !holds; }
};

/// Kernel of the full dart-level automorphism group acting on H_1.
PropositionVerdict proposition_verdict(const Graph& g, std::size_t cap = kDefaultAutCap);

/// Matrix whose column i holds the `to`-coordinates of cycle i of `from`.
IntMatrix change_of_basis(const CycleBasis& from, const CycleBasis& to);

/// True iff homology_matrix(b1, m) = C * homology_matrix(b2, m) * C^-1 for
/// the integral change of basis C from b2 to b1.
bool basis_change_conjugacy(const CycleBasis& b1, const CycleBasis& b2, const GraphMap& m);

/// True iff the matrix of m in b is integrally conjugate to the matrix of
/// subdivided_map(m) in the standard basis of the subdivision, through the
/// chain-level correspondence.
bool subdivision_conjugacy(const CycleBasis& b, const GraphMap& m);

}  // namespace finact

#endif  // FINACT_HOMOLOGY_HPP
