// Test-only reference implementations. Nothing here calls into the search,
// basis or canonical-form code it is used to check.
#ifndef FINACT_TESTS_ORACLES_HPP
#define FINACT_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "finact/automorphism.hpp"
#include "finact/graph.hpp"

namespace finact::oracle {

inline bool respects_structure(const Graph& g, const std::vector<int>& vmap, const std::vector<int>& dmap) {
  for (int d = 0; d < g.num_darts(); ++d) {
    if (dmap[d ^ 1] != (dmap[d] ^ 1)) return false;
    if (g.origin(dmap[d]) != vmap[g.origin(d)]) return false;
  }
  return true;
}

/// Every (vertex permutation, dart permutation) pair, checked directly.
/// Only feasible for a handful of darts.
inline std::vector<GraphMap> all_bijection_automorphisms(const Graph& g) {
  std::vector<GraphMap> result;
  std::vector<int> dmap(g.num_darts());
  std::iota(dmap.begin(), dmap.end(), 0);
  do {
    bool pairs_ok = true;
    for (int d = 0; d < g.num_darts() && pairs_ok; ++d) pairs_ok = dmap[d ^ 1] == (dmap[d] ^ 1);
    if (!pairs_ok) continue;
    std::vector<int> vmap(g.num_vertices());
    std::iota(vmap.begin(), vmap.end(), 0);
    do {
      if (respects_structure(g, vmap, dmap)) result.push_back({vmap, dmap});
    } while (std::next_permutation(vmap.begin(), vmap.end()));
  } while (std::next_permutation(dmap.begin(), dmap.end()));
  std::sort(result.begin(), result.end());
  return result;
}

/// Every vertex permutation, then every origin-compatible dart assignment
/// tried one dart at a time. Slower than the library search but shares no
/// code with it.
inline std::vector<GraphMap> dart_backtracking_automorphisms(const Graph& g) {
  std::vector<GraphMap> result;
  std::vector<int> vmap(g.num_vertices());
  std::iota(vmap.begin(), vmap.end(), 0);
  do {
    std::vector<int> dmap(g.num_darts(), -1);
    std::vector<bool> used(g.num_darts(), false);
    std::function<void(int)> go = [&](int d) {
      if (d == g.num_darts()) {
        result.push_back({vmap, dmap});
        return;
      }
      if (dmap[d] != -1) {
        go(d + 1);
        return;
      }
      for (int t = 0; t < g.num_darts(); ++t) {
        if (used[t] || used[t ^ 1]) continue;
        if (g.origin(t) != vmap[g.origin(d)] || g.origin(t ^ 1) != vmap[g.origin(d ^ 1)]) continue;
        dmap[d] = t;
        dmap[d ^ 1] = t ^ 1;
        used[t] = used[t ^ 1] = true;
        go(d + 1);
        used[t] = used[t ^ 1] = false;
        dmap[d] = dmap[d ^ 1] = -1;
      }
    };
    go(0);
  } while (std::next_permutation(vmap.begin(), vmap.end()));
  std::sort(result.begin(), result.end());
  return result;
}

/// Vertex bijection carrying the edge multiset of a onto that of b.
inline bool multigraph_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto normalized = [](const Graph& g, const std::vector<int>& p) {
    std::multiset<std::pair<int, int>> edges;
    for (auto [x, y] : g.edges()) edges.insert({std::min(p[x], p[y]), std::max(p[x], p[y])});
    return edges;
  };
  std::vector<int> id(b.num_vertices());
  std::iota(id.begin(), id.end(), 0);
  const auto target = normalized(b, id);
  std::vector<int> p = id;
  do {
    if (normalized(a, p) == target) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Every labeled multigraph on exactly n vertices with exactly m edges,
/// edges written (low, high) in non-decreasing order.
inline std::vector<Graph> labeled_multigraphs(int n, int m) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) slots.emplace_back(a, b);
  }
  std::vector<Graph> result;
  std::vector<std::pair<int, int>> current;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    if (static_cast<int>(current.size()) == m) {
      result.emplace_back(n, current);
      return;
    }
    for (std::size_t s = start; s < slots.size(); ++s) {
      current.push_back(slots[s]);
      go(s);
      current.pop_back();
    }
  };
  go(0);
  return result;
}

/// Copy of g with vertices relabeled by `perm` and edges shuffled and
/// randomly flipped.
inline Graph scrambled(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) {
    if (rng() & 1) std::swap(a, b);
    edges.emplace_back(perm[a], perm[b]);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(g.num_vertices(), edges);
}

}  // namespace finact::oracle

#endif  // FINACT_TESTS_ORACLES_HPP
