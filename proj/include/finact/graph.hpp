#ifndef FINACT_GRAPH_HPP
#define FINACT_GRAPH_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace finact {

using VertexId = int;
using EdgeId = int;
using DartId = int;

/// Finite multigraph in the half-edge (dart) model. Loops and parallel
/// edges are allowed.
///
/// Numbering is fixed by edge order: edge k owns darts 2k and 2k+1, dart 2k
/// originates at the edge's "from" vertex and dart 2k+1 at its "to" vertex.
/// Dart 2k is the positive orientation of edge k. Vertices are 0..n-1.
class Graph {
 public:
  /// Single vertex, no edges.
  Graph();

  /// Throws PreconditionError if num_vertices < 1 or an endpoint is out of
  /// range.
  Graph(int num_vertices, std::vector<std::pair<VertexId, VertexId>> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_darts() const { return 2 * num_edges(); }

  static constexpr EdgeId edge_of(DartId d) { return d / 2; }
  static constexpr DartId reverse(DartId d) { return d ^ 1; }
  static constexpr DartId positive_dart(EdgeId e) { return 2 * e; }
  static constexpr bool is_positive(DartId d) { return (d & 1) == 0; }

  VertexId origin(DartId d) const {
    return (d & 1) ? edges_[d / 2].second : edges_[d / 2].first;
  }
  VertexId head(DartId d) const { return origin(reverse(d)); }

  const std::pair<VertexId, VertexId>& endpoints(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  bool is_loop(EdgeId e) const { return edges_[e].first == edges_[e].second; }

  /// Darts originating at v, ascending.
  std::span<const DartId> darts_at(VertexId v) const;

  bool operator==(const Graph& other) const {
    return num_vertices_ == other.num_vertices_ && edges_ == other.edges_;
  }

 private:
  int num_vertices_ = 1;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<int> incidence_offsets_;
  std::vector<DartId> incidence_;
};

/// Vertices and edges of a parent graph. Every edge's endpoints are included.
struct Subgraph {
  const Graph* parent = nullptr;
  std::vector<VertexId> vertices;  // ascending
  std::vector<EdgeId> edges;       // ascending

  int euler_characteristic() const {
    return static_cast<int>(vertices.size()) - static_cast<int>(edges.size());
  }
  bool operator==(const Subgraph& other) const {
    return vertices == other.vertices && edges == other.edges;
  }
};

/// Result of barycentric subdivision. Original edge k becomes edges 2k
/// (from -> midpoint) and 2k+1 (midpoint -> to); midpoint of edge k is vertex
/// n+k.
struct Subdivision {
  Graph graph;
  /// For each original dart, the pair of subdivided darts traversed in order.
  std::vector<std::pair<DartId, DartId>> dart_pairs;
  int original_vertices = 0;
  int original_edges = 0;

  VertexId midpoint(EdgeId e) const { return original_vertices + e; }
};

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

bool is_connected(const Graph& g);
int euler_characteristic(const Graph& g);
/// Cycle rank. Throws PreconditionError if g is not connected.
int genus(const Graph& g);
/// Number of darts at v; a loop counts twice.
int valence(const Graph& g, VertexId v);
/// Edges with at least one endpoint of valence 1, ascending.
std::vector<EdgeId> free_edges(const Graph& g);
Subdivision subdivide_all(const Graph& g);

// Named graphs used across the tests, the CLI and the sharpness checks.
Graph rose_graph(int loops);
Graph theta_graph();
Graph cycle_graph(int n);
Graph path_graph(int edges);

}  // namespace finact

#endif  // FINACT_GRAPH_HPP
