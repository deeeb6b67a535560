#ifndef FINACT_ENUMERATION_HPP
#define FINACT_ENUMERATION_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "finact/automorphism.hpp"
#include "finact/graph.hpp"

namespace finact {

struct EnumBounds {
  int max_vertices = 1;
  int max_edges = 0;
  int min_genus = 0;
  int max_genus = 0;

  static constexpr int kVertexLimit = 6;
  static constexpr int kEdgeLimit = 9;

  /// Throws PreconditionError unless 1 <= max_vertices <= 6,
  /// 0 <= max_edges <= 9 and 0 <= min_genus <= max_genus.
  void validate() const;
};

/// Isomorphism-invariant signature of a multigraph with at most six
/// vertices: the smallest sorted edge list over all vertex relabelings.
/// Throws PreconditionError for larger graphs.
std::string canonical_form(const Graph& g);

/// Relabeled copy of g whose edge list is the one canonical_form encodes.
Graph canonical_graph(const Graph& g);

/// One representative (in canonical labeling) of every isomorphism class of
/// connected multigraphs with no vertex of valence 1 within the bounds,
/// ordered by vertex count, edge count, then signature.
std::vector<Graph> enumerate_graphs(const EnumBounds& bounds);

/// Number of classes per (vertices, edges, genus) cell.
using Census = std::map<std::tuple<int, int, int>, int>;
Census census(const std::vector<Graph>& graphs);

struct KernelFinding {
  std::string signature;
  Graph graph;
  int genus = 0;
  std::size_t kernel_order = 0;
  GraphMap witness;
};

struct HopfViolation {
  std::string signature;
  Graph graph;
  GraphMap element;
  std::int64_t lefschetz = 0;
  int chi_fixed = 0;
};

struct VerificationReport {
  EnumBounds bounds;
  std::size_t graphs_checked = 0;
  std::size_t automorphisms_checked = 0;
  std::vector<KernelFinding> proposition_violations;
  std::vector<HopfViolation> hopf_violations;
  std::vector<KernelFinding> counterexamples_outside_hypotheses;
  std::vector<std::string> cap_exceeded;  // signatures whose Aut was too large
  Census census;

  bool passed() const { return proposition_violations.empty() && hopf_violations.empty(); }
  std::string to_json() const;
  std::string to_table() const;
};

/// Checks homological faithfulness of the full automorphism group and the
/// Hopf identity for every element, on every enumerated graph. Graphs of
/// genus <= 1 are admitted; their nontrivial kernels are listed as
/// counterexamples outside the hypotheses rather than violations.
VerificationReport verify_proposition(const EnumBounds& bounds, std::size_t aut_cap = kDefaultAutCap);

/// The genus-2 core `core` with two pendant edges from vertex 0 to two new
/// leaves.
Graph with_pendant_leaf_pair(const Graph& core);

struct SharpnessCase {
  std::string name;
  Graph graph;
  bool has_free_edges = false;
  std::size_t kernel_order = 0;
  bool expected_nontrivial = false;

  bool as_expected() const { return expected_nontrivial ? kernel_order >= 2 : kernel_order == 1; }
};

struct SharpnessReport {
  std::vector<SharpnessCase> cases;
  bool passed() const;
};

/// Pendant-leaf-pair families on the theta graph and the rose with two loops
/// (kernel must be nontrivial), plus the bare theta graph as a control.
SharpnessReport verify_free_edge_sharpness();

}  // namespace finact

#endif  // FINACT_ENUMERATION_HPP
