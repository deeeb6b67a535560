#include "finact/graph.hpp"

#include <algorithm>
#include <queue>

#include "finact/error.hpp"
#include "json.hpp"

namespace finact {

Graph::Graph() : Graph(1, {}) {}

Graph::Graph(int num_vertices, std::vector<std::pair<VertexId, VertexId>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 1) {
    throw PreconditionError("graph needs at least one vertex");
  }
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto [a, b] = edges_[k];
    if (a < 0 || a >= num_vertices_ || b < 0 || b >= num_vertices_) {
      throw PreconditionError("edge " + std::to_string(k) + " has an endpoint outside 0.." +
                              std::to_string(num_vertices_ - 1));
    }
  }
  // Counting sort of darts by origin; darts stay ascending within a vertex.
  incidence_offsets_.assign(num_vertices_ + 1, 0);
  for (DartId d = 0; d < num_darts(); ++d) ++incidence_offsets_[origin(d) + 1];
  for (int v = 0; v < num_vertices_; ++v) incidence_offsets_[v + 1] += incidence_offsets_[v];
  incidence_.resize(num_darts());
  std::vector<int> fill(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
  for (DartId d = 0; d < num_darts(); ++d) incidence_[fill[origin(d)]++] = d;
}

std::span<const DartId> Graph::darts_at(VertexId v) const {
  return std::span<const DartId>(incidence_).subspan(
      incidence_offsets_[v], incidence_offsets_[v + 1] - incidence_offsets_[v]);
}

Graph parse_graph(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("$: expected an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("$.vertices: expected an array of integers");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("$.edges: expected an array of [from, to] pairs");
  }
  const json& vertices = doc["vertices"];
  const auto n = static_cast<int>(vertices.size());
  if (n == 0) throw ParseError("$.vertices: at least one vertex is required");
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const json& v = vertices[i];
    const std::string where = "$.vertices[" + std::to_string(i) + "]";
    if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
    const auto id = v.get<long long>();
    if (id < 0 || id >= n) {
      throw ParseError(where + ": vertex " + std::to_string(id) + " outside 0.." +
                       std::to_string(n - 1));
    }
    if (seen[id]) throw ParseError(where + ": duplicate vertex " + std::to_string(id));
    seen[id] = true;
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  const json& edge_list = doc["edges"];
  edges.reserve(edge_list.size());
  for (std::size_t k = 0; k < edge_list.size(); ++k) {
    const json& e = edge_list[k];
    const std::string where = "$.edges[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 2) throw ParseError(where + ": expected [from, to]");
    int ends[2];
    for (int side = 0; side < 2; ++side) {
      const std::string at = where + "[" + std::to_string(side) + "]";
      if (!e[side].is_number_integer()) throw ParseError(at + ": expected an integer");
      const auto id = e[side].get<long long>();
      if (id < 0 || id >= n) {
        throw ParseError(at + ": vertex " + std::to_string(id) + " not declared");
      }
      ends[side] = static_cast<int>(id);
    }
    edges.emplace_back(ends[0], ends[1]);
  }
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  nlohmann::ordered_json doc;
  auto vertices = nlohmann::ordered_json::array();
  for (int v = 0; v < g.num_vertices(); ++v) vertices.push_back(v);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc.dump();
}

bool is_connected(const Graph& g) {
  std::vector<bool> reached(g.num_vertices(), false);
  std::queue<VertexId> frontier;
  reached[0] = true;
  frontier.push(0);
  int count = 1;
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    for (DartId d : g.darts_at(v)) {
      const VertexId w = g.head(d);
      if (!reached[w]) {
        reached[w] = true;
        ++count;
        frontier.push(w);
      }
    }
  }
  return count == g.num_vertices();
}

int euler_characteristic(const Graph& g) { return g.num_vertices() - g.num_edges(); }

int genus(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("genus: graph is not connected");
  return 1 - euler_characteristic(g);
}

int valence(const Graph& g, VertexId v) {
  if (v < 0 || v >= g.num_vertices()) {
    throw PreconditionError("valence: unknown vertex " + std::to_string(v));
  }
  return static_cast<int>(g.darts_at(v).size());
}

std::vector<EdgeId> free_edges(const Graph& g) {
  std::vector<EdgeId> result;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.endpoints(e);
    if (valence(g, a) == 1 || valence(g, b) == 1) result.push_back(e);
  }
  return result;
}

Subdivision subdivide_all(const Graph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(2 * m);
  for (EdgeId e = 0; e < m; ++e) {
    const auto [a, b] = g.endpoints(e);
    edges.emplace_back(a, n + e);
    edges.emplace_back(n + e, b);
  }
  Subdivision sub{Graph(n + m, std::move(edges)), {}, n, m};
  sub.dart_pairs.resize(g.num_darts());
  for (EdgeId e = 0; e < m; ++e) {
    // Forward: from -> mid (dart 4e), mid -> to (dart 4e+2).
    sub.dart_pairs[2 * e] = {4 * e, 4 * e + 2};
    // Backward: to -> mid (dart 4e+3), mid -> from (dart 4e+1).
    sub.dart_pairs[2 * e + 1] = {4 * e + 3, 4 * e + 1};
  }
  return sub;
}

Graph rose_graph(int loops) {
  return Graph(1, std::vector<std::pair<VertexId, VertexId>>(loops, {0, 0}));
}

Graph theta_graph() { return Graph(2, {{0, 1}, {0, 1}, {0, 1}}); }

Graph cycle_graph(int n) {
  if (n < 1) throw PreconditionError("cycle_graph: n must be positive");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int edges) {
  std::vector<std::pair<VertexId, VertexId>> list;
  for (int i = 0; i < edges; ++i) list.emplace_back(i, i + 1);
  return Graph(edges + 1, std::move(list));
}

}  // namespace finact
