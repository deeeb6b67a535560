#include <random>
#include <string>

#include "doctest.h"
#include "finact/enumeration.hpp"
#include "finact/error.hpp"
#include "finact/graph.hpp"
#include "oracles.hpp"

using namespace finact;

TEST_CASE("parse_graph builds roses and theta with fixed dart numbering") {
  const Graph rose = parse_graph(R"({"vertices":[0],"edges":[[0,0],[0,0]]})");
  CHECK(rose.num_vertices() == 1);
  CHECK(rose.num_edges() == 2);
  CHECK(rose.num_darts() == 4);

  const Graph theta = parse_graph(R"({"vertices":[0,1],"edges":[[0,1],[0,1],[0,1]]})");
  CHECK(theta.num_vertices() == 2);
  CHECK(theta.num_edges() == 3);
  CHECK(theta == theta_graph());
  for (EdgeId e = 0; e < 3; ++e) {
    CHECK(theta.origin(2 * e) == 0);
    CHECK(theta.origin(2 * e + 1) == 1);
    CHECK(Graph::edge_of(2 * e + 1) == e);
    CHECK(Graph::reverse(2 * e) == 2 * e + 1);
  }
}

TEST_CASE("parse_graph reports the location of bad input") {
  auto message = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"vertices":[0,1],"edges":[[0,2]]})") == "$.edges[0][1]: vertex 2 not declared");
  CHECK(message(R"({"vertices":[0,0],"edges":[]})") == "$.vertices[1]: duplicate vertex 0");
  CHECK(message(R"({"vertices":[0,3],"edges":[]})").find("$.vertices[1]") == 0);
  CHECK(message(R"({"vertices":[],"edges":[]})").find("$.vertices") == 0);
  CHECK(message(R"({"vertices":[0],"edges":[[0]]})") == "$.edges[0]: expected [from, to]");
  CHECK(message(R"({"vertices":[0],"edges":[[0,"a"]]})") == "$.edges[0][1]: expected an integer");
  CHECK(message(R"({"vertices":[0]})").find("$.edges") == 0);
  CHECK(message(R"({"vertices":[0],"edges":[)").find("malformed JSON at byte") == 0);
}

TEST_CASE("vertices may be listed in any order") {
  const Graph g = parse_graph(R"({"vertices":[1,0],"edges":[[1,0]]})");
  CHECK(g.num_vertices() == 2);
  CHECK(g.origin(0) == 1);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(theta_graph()));
  CHECK_FALSE(is_connected(Graph(2, {{0, 0}, {1, 1}})));
  CHECK(is_connected(Graph()));
  CHECK_FALSE(is_connected(Graph(2, {})));
}

TEST_CASE("euler characteristic and genus") {
  CHECK(euler_characteristic(rose_graph(2)) == -1);
  CHECK(euler_characteristic(theta_graph()) == -1);
  CHECK(euler_characteristic(cycle_graph(4)) == 0);
  for (int g = 0; g <= 6; ++g) CHECK(genus(rose_graph(g)) == g);
  CHECK(genus(theta_graph()) == 2);
  for (int n = 1; n <= 8; ++n) CHECK(genus(cycle_graph(n)) == 1);
  CHECK_THROWS_AS(genus(Graph(2, {{0, 0}, {1, 1}})), PreconditionError);
}

TEST_CASE("valence counts loops twice") {
  CHECK(valence(rose_graph(2), 0) == 4);
  CHECK(valence(theta_graph(), 0) == 3);
  CHECK(valence(theta_graph(), 1) == 3);
  CHECK(valence(path_graph(2), 0) == 1);
  CHECK(valence(path_graph(2), 2) == 1);
  CHECK_THROWS_AS(valence(theta_graph(), 2), PreconditionError);
}

TEST_CASE("free edges") {
  CHECK(free_edges(theta_graph()).empty());
  CHECK(free_edges(path_graph(2)) == std::vector<EdgeId>{0, 1});
  const Graph pendant(3, {{0, 1}, {0, 1}, {0, 1}, {0, 2}});
  CHECK(free_edges(pendant) == std::vector<EdgeId>{3});
  CHECK(free_edges(rose_graph(1)).empty());
}

TEST_CASE("subdivide_all") {
  SUBCASE("rose with one loop becomes a 2-cycle") {
    const Subdivision sub = subdivide_all(rose_graph(1));
    CHECK(sub.graph == Graph(2, {{0, 1}, {1, 0}}));
    CHECK(genus(sub.graph) == 1);
    CHECK(sub.dart_pairs[0] == std::pair<DartId, DartId>{0, 2});
    CHECK(sub.dart_pairs[1] == std::pair<DartId, DartId>{3, 1});
  }
  SUBCASE("theta") {
    const Subdivision sub = subdivide_all(theta_graph());
    CHECK(sub.graph.num_vertices() == 5);
    CHECK(sub.graph.num_edges() == 6);
    CHECK(genus(sub.graph) == 2);
    CHECK(sub.midpoint(2) == 4);
  }
  SUBCASE("edgeless graph is unchanged") {
    CHECK(subdivide_all(Graph()).graph == Graph());
  }
  SUBCASE("dart pairs walk from origin to head") {
    const Subdivision sub = subdivide_all(theta_graph());
    for (DartId d = 0; d < theta_graph().num_darts(); ++d) {
      const auto [first, second] = sub.dart_pairs[d];
      CHECK(sub.graph.origin(first) == theta_graph().origin(d));
      CHECK(sub.graph.head(first) == sub.graph.origin(second));
      CHECK(sub.graph.head(second) == theta_graph().head(d));
    }
  }
}

TEST_CASE("graph invariants over the enumerated census") {
  const auto graphs = enumerate_graphs({4, 6, 0, 6});
  REQUIRE(graphs.size() > 100);
  for (const Graph& g : graphs) {
    CHECK(euler_characteristic(g) == g.num_vertices() - g.num_edges());
    const Subdivision sub = subdivide_all(g);
    CHECK(is_connected(sub.graph) == is_connected(g));
    CHECK(genus(sub.graph) == genus(g));
    bool has_leaf = false;
    for (VertexId v = 0; v < g.num_vertices(); ++v) has_leaf = has_leaf || valence(g, v) == 1;
    CHECK(free_edges(g).empty() == !has_leaf);
  }
}

TEST_CASE("free edges iff leaves, including graphs that have them") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      for (const Graph& g : oracle::labeled_multigraphs(n, m)) {
        bool has_leaf = false;
        for (VertexId v = 0; v < n; ++v) has_leaf = has_leaf || valence(g, v) == 1;
        CHECK(free_edges(g).empty() == !has_leaf);
        // One more edge lowers the Euler characteristic by exactly one.
        auto edges = g.edges();
        edges.emplace_back(0, n - 1);
        CHECK(euler_characteristic(Graph(n, edges)) == euler_characteristic(g) - 1);
      }
    }
  }
}

TEST_CASE("serialize then parse is the identity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int m = static_cast<int>(rng() % 9);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int k = 0; k < m; ++k) edges.emplace_back(rng() % n, rng() % n);
    const Graph g(n, edges);
    const std::string text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);
  }
  CHECK(serialize_graph(theta_graph()) == R"({"vertices":[0,1],"edges":[[0,1],[0,1],[0,1]]})");
}
