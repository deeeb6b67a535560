#include "finact/homology.hpp"

#include <algorithm>
#include <queue>

#include "finact/error.hpp"

namespace finact {

namespace {

// Builds the basis from a set of tree edges, assumed to form a spanning
// forest with one root per component (the smallest vertex of each).
CycleBasis basis_from_forest(const Graph& g, std::vector<EdgeId> tree,
                             std::vector<EdgeId> cotree_order) {
  const int n = g.num_vertices();
  std::vector<bool> in_tree(g.num_edges(), false);
  for (EdgeId e : tree) in_tree[e] = true;

  // Chain of the tree path from the component root to each vertex.
  std::vector<Chain> potential(n);
  std::vector<bool> reached(n, false);
  for (VertexId root = 0; root < n; ++root) {
    if (reached[root]) continue;
    reached[root] = true;
    potential[root].assign(g.num_edges(), 0);
    std::queue<VertexId> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const VertexId u = frontier.front();
      frontier.pop();
      for (DartId d : g.darts_at(u)) {
        const EdgeId e = Graph::edge_of(d);
        const VertexId v = g.head(d);
        if (!in_tree[e] || reached[v]) continue;
        reached[v] = true;
        potential[v] = potential[u];
        potential[v][e] += Graph::is_positive(d) ? 1 : -1;
        frontier.push(v);
      }
    }
  }

  CycleBasis b{g, std::move(tree), std::move(cotree_order), {}};
  std::sort(b.tree_edges.begin(), b.tree_edges.end());
  for (EdgeId e : b.cotree_edges) {
    const VertexId tail = g.origin(Graph::positive_dart(e));
    const VertexId head = g.head(Graph::positive_dart(e));
    Chain cycle(g.num_edges(), 0);
    for (int k = 0; k < g.num_edges(); ++k) cycle[k] = potential[tail][k] - potential[head][k];
    cycle[e] += 1;
    b.cycles.push_back(std::move(cycle));
  }
  return b;
}

std::vector<EdgeId> bfs_forest(const Graph& g) {
  std::vector<EdgeId> tree;
  std::vector<bool> reached(g.num_vertices(), false);
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (reached[root]) continue;
    reached[root] = true;
    std::queue<VertexId> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const VertexId u = frontier.front();
      frontier.pop();
      for (DartId d : g.darts_at(u)) {
        const VertexId v = g.head(d);
        if (reached[v]) continue;
        reached[v] = true;
        tree.push_back(Graph::edge_of(d));
        frontier.push(v);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::vector<EdgeId> complement(const Graph& g, const std::vector<EdgeId>& tree) {
  std::vector<bool> in_tree(g.num_edges(), false);
  for (EdgeId e : tree) in_tree[e] = true;
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!in_tree[e]) rest.push_back(e);
  }
  return rest;
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + ": graph is not connected");
}

}  // namespace

std::vector<std::int64_t> CycleBasis::coordinates(const Chain& cycle) const {
  std::vector<std::int64_t> coords;
  coords.reserve(cotree_edges.size());
  for (EdgeId e : cotree_edges) coords.push_back(cycle[e]);
  return coords;
}

std::vector<EdgeId> spanning_tree(const Graph& g) {
  require_connected(g, "spanning_tree");
  return bfs_forest(g);
}

CycleBasis cycle_basis(const Graph& g) {
  std::vector<EdgeId> tree = spanning_tree(g);
  std::vector<EdgeId> cotree = complement(g, tree);
  return basis_from_forest(g, std::move(tree), std::move(cotree));
}

CycleBasis cycle_basis(const Graph& g, std::vector<EdgeId> tree, std::vector<EdgeId> cotree_order) {
  require_connected(g, "cycle_basis");
  std::sort(tree.begin(), tree.end());
  if (static_cast<int>(tree.size()) != g.num_vertices() - 1 ||
      std::adjacent_find(tree.begin(), tree.end()) != tree.end() ||
      (!tree.empty() && (tree.front() < 0 || tree.back() >= g.num_edges()))) {
    throw PreconditionError("cycle_basis: not a spanning tree");
  }
  // n-1 edges that connect everything form a tree.
  Graph tree_only(g.num_vertices(), [&] {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e : tree) edges.push_back(g.endpoints(e));
    return edges;
  }());
  if (!is_connected(tree_only)) throw PreconditionError("cycle_basis: tree edges do not span");
  std::vector<EdgeId> sorted_cotree = cotree_order;
  std::sort(sorted_cotree.begin(), sorted_cotree.end());
  if (sorted_cotree != complement(g, tree)) {
    throw PreconditionError("cycle_basis: cotree order must list every non-tree edge once");
  }
  return basis_from_forest(g, std::move(tree), std::move(cotree_order));
}

CycleBasis forest_cycle_basis(const Graph& g) {
  std::vector<EdgeId> forest = bfs_forest(g);
  std::vector<EdgeId> cotree = complement(g, forest);
  return basis_from_forest(g, std::move(forest), std::move(cotree));
}

Chain push_chain(const GraphMap& m, const Chain& chain) {
  Chain image(chain.size(), 0);
  for (std::size_t e = 0; e < chain.size(); ++e) {
    if (chain[e] == 0) continue;
    const DartId d = m.dart_map[Graph::positive_dart(static_cast<EdgeId>(e))];
    image[Graph::edge_of(d)] += Graph::is_positive(d) ? chain[e] : -chain[e];
  }
  return image;
}

IntMatrix homology_matrix(const CycleBasis& b, const GraphMap& m) {
  if (!is_automorphism(b.graph, m)) {
    throw PreconditionError("homology_matrix: map is not an automorphism");
  }
  IntMatrix h(b.rank());
  for (int i = 0; i < b.rank(); ++i) {
    const auto column = b.coordinates(push_chain(m, b.cycles[i]));
    for (int j = 0; j < b.rank(); ++j) h(j, i) = column[j];
  }
  return h;
}

std::int64_t lefschetz_number(const CycleBasis& b, const GraphMap& m) {
  require_connected(b.graph, "lefschetz_number");
  return 1 - homology_matrix(b, m).trace();
}

HopfCheck hopf_check(const Graph& g, const GraphMap& m) {
  require_connected(g, "hopf_check");
  HopfCheck result;
  result.lefschetz = lefschetz_number(cycle_basis(g), m);
  if (inverted_edges(m).empty()) {
    result.chi_fixed = fixed_subgraph(g, m).euler_characteristic();
  } else {
    const Subdivision sub = subdivide_all(g);
    result.chi_fixed = fixed_subgraph(sub.graph, subdivided_map(m, sub)).euler_characteristic();
    result.subdivided = true;
  }
  result.equal = result.lefschetz == result.chi_fixed;
  return result;
}

AutGroup homology_kernel(const CycleBasis& b, const AutGroup& group) {
  if (!(b.graph == group.graph)) {
    throw PreconditionError("homology_kernel: basis and group live on different graphs");
  }
  AutGroup kernel{group.graph, {}};
  for (const GraphMap& m : group.elements) {
    if (homology_matrix(b, m).is_identity()) kernel.elements.push_back(m);
  }
  return kernel;
}

PropositionVerdict proposition_verdict(const Graph& g, std::size_t cap) {
  PropositionVerdict v;
  v.connected = is_connected(g);
  const CycleBasis b = forest_cycle_basis(g);
  v.genus = b.rank();
  v.has_free_edges = !free_edges(g).empty();
  const AutGroup kernel = homology_kernel(b, automorphism_group(g, cap));
  v.kernel_order = kernel.order();
  v.holds = v.kernel_order == 1;
  if (kernel.order() > 1) v.witness = kernel.elements[1];
  return v;
}

IntMatrix change_of_basis(const CycleBasis& from, const CycleBasis& to) {
  if (!(from.graph == to.graph)) {
    throw PreconditionError("change_of_basis: bases live on different graphs");
  }
  IntMatrix c(from.rank());
  for (int i = 0; i < from.rank(); ++i) {
    const auto column = to.coordinates(from.cycles[i]);
    for (int j = 0; j < to.rank(); ++j) c(j, i) = column[j];
  }
  return c;
}

bool basis_change_conjugacy(const CycleBasis& b1, const CycleBasis& b2, const GraphMap& m) {
  const IntMatrix to_b1 = change_of_basis(b2, b1);
  const IntMatrix to_b2 = change_of_basis(b1, b2);
  if (!(to_b1 * to_b2).is_identity()) return false;
  return homology_matrix(b1, m) == to_b1 * homology_matrix(b2, m) * to_b2;
}

bool subdivision_conjugacy(const CycleBasis& b, const GraphMap& m) {
  const Subdivision sub = subdivide_all(b.graph);
  const CycleBasis fine = forest_cycle_basis(sub.graph);
  if (fine.rank() != b.rank()) return false;
  const int g = b.rank();

  IntMatrix lift(g);
  for (int i = 0; i < g; ++i) {
    Chain chain(sub.graph.num_edges(), 0);
    for (EdgeId e = 0; e < b.graph.num_edges(); ++e) {
      chain[2 * e] = b.cycles[i][e];
      chain[2 * e + 1] = b.cycles[i][e];
    }
    const auto column = fine.coordinates(chain);
    for (int j = 0; j < g; ++j) lift(j, i) = column[j];
  }
  IntMatrix project(g);
  for (int i = 0; i < g; ++i) {
    Chain chain(b.graph.num_edges(), 0);
    for (EdgeId e = 0; e < b.graph.num_edges(); ++e) {
      if (fine.cycles[i][2 * e] != fine.cycles[i][2 * e + 1]) return false;
      chain[e] = fine.cycles[i][2 * e];
    }
    const auto column = b.coordinates(chain);
    for (int j = 0; j < g; ++j) project(j, i) = column[j];
  }
  if (!(lift * project).is_identity()) return false;
  return homology_matrix(fine, subdivided_map(m, sub)) == lift * homology_matrix(b, m) * project;
}

}  // namespace finact
