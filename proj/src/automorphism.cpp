#include "finact/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "finact/error.hpp"
#include "json.hpp"

namespace finact {

namespace {

void check_sizes(const Graph& g, const GraphMap& m) {
  if (static_cast<int>(m.vertex_map.size()) != g.num_vertices() ||
      static_cast<int>(m.dart_map.size()) != g.num_darts()) {
    throw PreconditionError("graph map domain does not match graph (" +
                            std::to_string(m.vertex_map.size()) + " vertices, " +
                            std::to_string(m.dart_map.size()) + " darts)");
  }
}

bool is_permutation_of_range(const std::vector<int>& p) {
  std::vector<bool> hit(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

// Edge multiplicities between unordered vertex pairs; loops on the diagonal.
std::vector<std::vector<int>> multiplicity_matrix(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const auto& [a, b] : g.edges()) {
    ++mult[a][b];
    if (a != b) ++mult[b][a];
  }
  return mult;
}

// Vertex invariant: valence, loop count, then the sorted (valence, multiplicity)
// profile of the neighbours.
std::vector<std::vector<int>> vertex_invariants(const Graph& g,
                                                const std::vector<std::vector<int>>& mult) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> inv(n);
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<int, int>> profile;
    for (int w = 0; w < n; ++w) {
      if (w != v && mult[v][w] > 0) profile.emplace_back(valence(g, w), mult[v][w]);
    }
    std::sort(profile.begin(), profile.end());
    inv[v] = {valence(g, v), mult[v][v]};
    for (const auto& [val, mu] : profile) {
      inv[v].push_back(val);
      inv[v].push_back(mu);
    }
  }
  return inv;
}

// Dart assignments (source dart -> image dart) for one edge bundle.
using DartAssignment = std::vector<std::pair<DartId, DartId>>;

std::vector<DartAssignment> bundle_matchings(const Graph& g, const std::vector<EdgeId>& source,
                                             const std::vector<EdgeId>& target,
                                             VertexId source_low, VertexId target_low) {
  std::vector<DartAssignment> result;
  std::vector<int> perm(source.size());
  std::iota(perm.begin(), perm.end(), 0);
  const bool loops = g.is_loop(source.front());
  do {
    if (loops) {
      const std::size_t k = source.size();
      for (std::size_t flips = 0; flips < (std::size_t{1} << k); ++flips) {
        DartAssignment a;
        for (std::size_t i = 0; i < k; ++i) {
          const DartId from = Graph::positive_dart(source[i]);
          DartId to = Graph::positive_dart(target[perm[i]]);
          if (flips >> i & 1) to = Graph::reverse(to);
          a.emplace_back(from, to);
          a.emplace_back(Graph::reverse(from), Graph::reverse(to));
        }
        result.push_back(std::move(a));
      }
    } else {
      DartAssignment a;
      for (std::size_t i = 0; i < source.size(); ++i) {
        DartId from = Graph::positive_dart(source[i]);
        if (g.origin(from) != source_low) from = Graph::reverse(from);
        DartId to = Graph::positive_dart(target[perm[i]]);
        if (g.origin(to) != target_low) to = Graph::reverse(to);
        a.emplace_back(from, to);
        a.emplace_back(Graph::reverse(from), Graph::reverse(to));
      }
      result.push_back(std::move(a));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::size_t cap)
      : g_(g),
        cap_(cap),
        mult_(multiplicity_matrix(g)),
        invariants_(vertex_invariants(g, mult_)),
        image_(g.num_vertices(), -1),
        used_(g.num_vertices(), false) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto [a, b] = g.endpoints(e);
      if (a > b) std::swap(a, b);
      bundles_[{a, b}].push_back(e);
    }
  }

  std::vector<GraphMap> run() {
    assign(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void assign(int v) {
    const int n = g_.num_vertices();
    if (v == n) {
      emit_dart_maps();
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used_[w] || invariants_[w] != invariants_[v]) continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u) {
        consistent = mult_[v][u] == mult_[w][image_[u]];
      }
      if (!consistent) continue;
      image_[v] = w;
      used_[w] = true;
      assign(v + 1);
      used_[w] = false;
      image_[v] = -1;
    }
  }

  void emit_dart_maps() {
    std::vector<std::vector<DartAssignment>> options;
    std::size_t product = 1;
    for (const auto& [ends, edges] : bundles_) {
      const auto [a, b] = ends;
      VertexId ta = image_[a];
      VertexId tb = image_[b];
      const auto& target = bundles_.at({std::min(ta, tb), std::max(ta, tb)});
      options.push_back(bundle_matchings(g_, edges, target, a, ta));
      product *= options.back().size();
      if (product > cap_) overflow();
    }
    if (found_.size() + product > cap_) overflow();

    GraphMap m;
    m.vertex_map = image_;
    m.dart_map.assign(g_.num_darts(), -1);
    std::vector<std::size_t> choice(options.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < options.size(); ++i) {
        for (const auto& [from, to] : options[i][choice[i]]) m.dart_map[from] = to;
      }
      found_.push_back(m);
      std::size_t i = 0;
      while (i < options.size() && ++choice[i] == options[i].size()) choice[i++] = 0;
      if (i == options.size()) break;
    }
  }

  [[noreturn]] void overflow() const {
    throw CapExceeded("automorphism group exceeds cap of " + std::to_string(cap_) +
                      " elements");
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<std::vector<int>> mult_;
  std::vector<std::vector<int>> invariants_;
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> bundles_;
  std::vector<VertexId> image_;
  std::vector<bool> used_;
  std::vector<GraphMap> found_;
};

}  // namespace

bool is_automorphism(const Graph& g, const GraphMap& m) {
  check_sizes(g, m);
  if (!is_permutation_of_range(m.vertex_map) || !is_permutation_of_range(m.dart_map)) {
    return false;
  }
  for (DartId d = 0; d < g.num_darts(); ++d) {
    if (g.origin(m.dart_map[d]) != m.vertex_map[g.origin(d)]) return false;
    if (m.dart_map[Graph::reverse(d)] != Graph::reverse(m.dart_map[d])) return false;
  }
  return true;
}

GraphMap identity_map(const Graph& g) {
  GraphMap m;
  m.vertex_map.resize(g.num_vertices());
  m.dart_map.resize(g.num_darts());
  std::iota(m.vertex_map.begin(), m.vertex_map.end(), 0);
  std::iota(m.dart_map.begin(), m.dart_map.end(), 0);
  return m;
}

GraphMap compose(const GraphMap& a, const GraphMap& b) {
  if (a.vertex_map.size() != b.vertex_map.size() || a.dart_map.size() != b.dart_map.size()) {
    throw PreconditionError("compose: maps act on different graphs");
  }
  GraphMap c;
  c.vertex_map.resize(a.vertex_map.size());
  c.dart_map.resize(a.dart_map.size());
  for (std::size_t v = 0; v < b.vertex_map.size(); ++v) c.vertex_map[v] = a.vertex_map[b.vertex_map[v]];
  for (std::size_t d = 0; d < b.dart_map.size(); ++d) c.dart_map[d] = a.dart_map[b.dart_map[d]];
  return c;
}

GraphMap inverse(const GraphMap& a) {
  GraphMap inv;
  inv.vertex_map.resize(a.vertex_map.size());
  inv.dart_map.resize(a.dart_map.size());
  for (std::size_t v = 0; v < a.vertex_map.size(); ++v) inv.vertex_map[a.vertex_map[v]] = static_cast<int>(v);
  for (std::size_t d = 0; d < a.dart_map.size(); ++d) inv.dart_map[a.dart_map[d]] = static_cast<int>(d);
  return inv;
}

AutGroup automorphism_group(const Graph& g, std::size_t cap) {
  return AutGroup{g, AutomorphismSearch(g, cap).run()};
}

std::vector<EdgeId> inverted_edges(const GraphMap& m) {
  std::vector<EdgeId> result;
  for (std::size_t d = 0; d < m.dart_map.size(); d += 2) {
    if (m.dart_map[d] == static_cast<DartId>(d + 1)) result.push_back(static_cast<EdgeId>(d / 2));
  }
  return result;
}

Subgraph fixed_subgraph(const Graph& g, const GraphMap& m) {
  check_sizes(g, m);
  if (!inverted_edges(m).empty()) {
    throw PreconditionError("fixed_subgraph: map inverts an edge; subdivide first");
  }
  Subgraph fixed{&g, {}, {}};
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (m.vertex_map[v] == v) fixed.vertices.push_back(v);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (m.dart_map[Graph::positive_dart(e)] == Graph::positive_dart(e)) fixed.edges.push_back(e);
  }
  return fixed;
}

GraphMap subdivided_map(const GraphMap& m, const Subdivision& sub) {
  if (static_cast<int>(m.vertex_map.size()) != sub.original_vertices ||
      static_cast<int>(m.dart_map.size()) != 2 * sub.original_edges) {
    throw PreconditionError("subdivided_map: correspondence does not match the map");
  }
  GraphMap s;
  s.vertex_map.resize(sub.graph.num_vertices());
  s.dart_map.resize(sub.graph.num_darts());
  for (VertexId v = 0; v < sub.original_vertices; ++v) s.vertex_map[v] = m.vertex_map[v];
  for (EdgeId e = 0; e < sub.original_edges; ++e) {
    s.vertex_map[sub.midpoint(e)] = sub.midpoint(Graph::edge_of(m.dart_map[Graph::positive_dart(e)]));
  }
  for (DartId d = 0; d < 2 * sub.original_edges; ++d) {
    const auto& [first, second] = sub.dart_pairs[d];
    const auto& [first_image, second_image] = sub.dart_pairs[m.dart_map[d]];
    s.dart_map[first] = first_image;
    s.dart_map[second] = second_image;
  }
  return s;
}

AutGroup closure(const Graph& g, const std::vector<GraphMap>& generators, std::size_t cap) {
  for (const GraphMap& gen : generators) {
    if (!is_automorphism(g, gen)) throw PreconditionError("closure: generator is not an automorphism");
  }
  std::set<GraphMap> seen{identity_map(g)};
  std::queue<GraphMap> frontier;
  frontier.push(identity_map(g));
  while (!frontier.empty()) {
    const GraphMap x = std::move(frontier.front());
    frontier.pop();
    for (const GraphMap& gen : generators) {
      GraphMap y = compose(x, gen);
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          throw CapExceeded("closure exceeds cap of " + std::to_string(cap) + " elements");
        }
        frontier.push(std::move(y));
      }
    }
  }
  return AutGroup{g, std::vector<GraphMap>(seen.begin(), seen.end())};
}

std::string to_json(const GraphMap& m) {
  nlohmann::ordered_json doc;
  doc["vertex_map"] = m.vertex_map;
  doc["dart_map"] = m.dart_map;
  return doc.dump();
}

}  // namespace finact
