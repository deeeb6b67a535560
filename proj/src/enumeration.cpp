#include "finact/enumeration.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

#include "finact/error.hpp"
#include "finact/homology.hpp"
#include "json.hpp"

namespace finact {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Sorted edge list with endpoints normalized to (low, high), after
// relabeling by `perm`.
EdgeList relabeled(const Graph& g, const std::vector<int>& perm) {
  EdgeList edges;
  edges.reserve(g.num_edges());
  for (const auto& [a, b] : g.edges()) {
    const int x = perm[a];
    const int y = perm[b];
    edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

EdgeList minimal_edge_list(const Graph& g) {
  if (g.num_vertices() > EnumBounds::kVertexLimit) {
    throw PreconditionError("canonical_form: at most " + std::to_string(EnumBounds::kVertexLimit) +
                            " vertices supported");
  }
  std::vector<int> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best = relabeled(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    EdgeList candidate = relabeled(g, perm);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

std::string encode(int vertices, const EdgeList& edges) {
  std::string s = std::to_string(vertices) + ":";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(edges[i].first) + '-' + std::to_string(edges[i].second);
  }
  return s;
}

// Connected, no leaf, and degrees non-increasing in the vertex label. Every
// isomorphism class has such a labeling, so the filter only drops
// duplicates before the expensive canonization.
bool worth_canonizing(int n, const EdgeList& edges) {
  std::array<int, EnumBounds::kVertexLimit> degree{};
  std::array<int, EnumBounds::kVertexLimit> parent{};
  std::iota(parent.begin(), parent.begin() + n, 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    ++degree[a];
    ++degree[b];
    parent[find(a)] = find(b);
  }
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1 || (v > 0 && degree[v] > degree[v - 1]) || find(v) != find(0)) return false;
  }
  return true;
}

nlohmann::ordered_json graph_json(const Graph& g) {
  return nlohmann::ordered_json::parse(serialize_graph(g));
}

nlohmann::ordered_json map_json(const GraphMap& m) {
  return nlohmann::ordered_json::parse(to_json(m));
}

nlohmann::ordered_json finding_json(const KernelFinding& f) {
  nlohmann::ordered_json j;
  j["signature"] = f.signature;
  j["graph"] = graph_json(f.graph);
  j["genus"] = f.genus;
  j["kernel_order"] = f.kernel_order;
  j["witness"] = map_json(f.witness);
  return j;
}

}  // namespace

void EnumBounds::validate() const {
  if (max_vertices < 1 || max_vertices > kVertexLimit) {
    throw PreconditionError("max_vertices must be in 1.." + std::to_string(kVertexLimit));
  }
  if (max_edges < 0 || max_edges > kEdgeLimit) {
    throw PreconditionError("max_edges must be in 0.." + std::to_string(kEdgeLimit));
  }
  if (min_genus < 0 || min_genus > max_genus) {
    throw PreconditionError("genus range must satisfy 0 <= min_genus <= max_genus");
  }
}

std::string canonical_form(const Graph& g) { return encode(g.num_vertices(), minimal_edge_list(g)); }

Graph canonical_graph(const Graph& g) { return Graph(g.num_vertices(), minimal_edge_list(g)); }

std::vector<Graph> enumerate_graphs(const EnumBounds& bounds) {
  bounds.validate();
  std::vector<Graph> result;
  for (int n = 1; n <= bounds.max_vertices; ++n) {
    EdgeList slots;
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) slots.emplace_back(a, b);
    }
    for (int m = 0; m <= bounds.max_edges; ++m) {
      const int genus = m - n + 1;
      if (genus < bounds.min_genus || genus > bounds.max_genus) continue;
      std::map<std::string, Graph> classes;
      // Non-decreasing slot indices enumerate edge multisets.
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        EdgeList edges;
        for (std::size_t i : pick) edges.push_back(slots[i]);
        if (worth_canonizing(n, edges)) {
          const EdgeList canon = minimal_edge_list(Graph(n, std::move(edges)));
          classes.try_emplace(encode(n, canon), Graph(n, canon));
        }
        int i = m - 1;
        while (i >= 0 && pick[i] + 1 == slots.size()) --i;
        if (i < 0) break;
        ++pick[i];
        for (int k = i + 1; k < m; ++k) pick[k] = pick[i];
      }
      for (auto& [signature, g] : classes) result.push_back(std::move(g));
    }
  }
  return result;
}

Census census(const std::vector<Graph>& graphs) {
  Census cells;
  for (const Graph& g : graphs) {
    ++cells[{g.num_vertices(), g.num_edges(), g.num_edges() - g.num_vertices() + 1}];
  }
  return cells;
}

VerificationReport verify_proposition(const EnumBounds& bounds, std::size_t aut_cap) {
  VerificationReport report;
  report.bounds = bounds;
  const std::vector<Graph> graphs = enumerate_graphs(bounds);
  report.census = census(graphs);
  for (const Graph& g : graphs) {
    const std::string signature = canonical_form(g);
    AutGroup group;
    try {
      group = automorphism_group(g, aut_cap);
    } catch (const CapExceeded&) {
      report.cap_exceeded.push_back(signature);
      continue;
    }
    ++report.graphs_checked;
    report.automorphisms_checked += group.order();

    const CycleBasis basis = cycle_basis(g);
    const AutGroup kernel = homology_kernel(basis, group);
    if (kernel.order() > 1) {
      KernelFinding finding{signature, g, basis.rank(), kernel.order(), kernel.elements[1]};
      const bool hypotheses = basis.rank() >= 2;  // connected, no free edges by construction
      (hypotheses ? report.proposition_violations : report.counterexamples_outside_hypotheses)
          .push_back(std::move(finding));
    }
    for (const GraphMap& m : group.elements) {
      const HopfCheck check = hopf_check(g, m);
      if (!check.equal) {
        report.hopf_violations.push_back({signature, g, m, check.lefschetz, check.chi_fixed});
      }
    }
  }
  return report;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["bounds"] = {{"max_vertices", bounds.max_vertices},
                   {"max_edges", bounds.max_edges},
                   {"min_genus", bounds.min_genus},
                   {"max_genus", bounds.max_genus}};
  doc["graphs_checked"] = graphs_checked;
  doc["automorphisms_checked"] = automorphisms_checked;
  auto violations = nlohmann::ordered_json::array();
  for (const auto& f : proposition_violations) violations.push_back(finding_json(f));
  doc["proposition_violations"] = std::move(violations);
  auto hopf = nlohmann::ordered_json::array();
  for (const auto& h : hopf_violations) {
    nlohmann::ordered_json j;
    j["signature"] = h.signature;
    j["graph"] = graph_json(h.graph);
    j["element"] = map_json(h.element);
    j["lefschetz"] = h.lefschetz;
    j["chi_fixed"] = h.chi_fixed;
    hopf.push_back(std::move(j));
  }
  doc["hopf_violations"] = std::move(hopf);
  auto outside = nlohmann::ordered_json::array();
  for (const auto& f : counterexamples_outside_hypotheses) outside.push_back(finding_json(f));
  doc["counterexamples_outside_hypotheses"] = std::move(outside);
  doc["cap_exceeded"] = cap_exceeded;
  auto cells = nlohmann::ordered_json::array();
  for (const auto& [key, count] : census) {
    const auto& [v, e, genus] = key;
    cells.push_back({{"vertices", v}, {"edges", e}, {"genus", genus}, {"classes", count}});
  }
  doc["census"] = std::move(cells);
  doc["passed"] = passed();
  return doc.dump(2);
}

std::string VerificationReport::to_table() const {
  std::ostringstream out;
  out << "bounds: V<=" << bounds.max_vertices << " E<=" << bounds.max_edges << " genus "
      << bounds.min_genus << ".." << bounds.max_genus << '\n';
  out << "  V  E  genus  classes\n";
  for (const auto& [key, count] : census) {
    const auto& [v, e, genus] = key;
    out << "  " << v << "  " << e << "  " << genus << "      " << count << '\n';
  }
  out << "graphs checked:          " << graphs_checked << '\n'
      << "automorphisms checked:   " << automorphisms_checked << '\n'
      << "proposition violations:  " << proposition_violations.size() << '\n'
      << "hopf violations:         " << hopf_violations.size() << '\n'
      << "outside hypotheses:      " << counterexamples_outside_hypotheses.size() << '\n';
  for (const auto& f : counterexamples_outside_hypotheses) {
    out << "  " << f.signature << "  genus " << f.genus << "  kernel order " << f.kernel_order << '\n';
  }
  for (const auto& f : proposition_violations) {
    out << "VIOLATION " << f.signature << "  kernel order " << f.kernel_order << '\n';
  }
  for (const auto& h : hopf_violations) {
    out << "HOPF VIOLATION " << h.signature << "  L=" << h.lefschetz << " chi=" << h.chi_fixed << '\n';
  }
  if (!cap_exceeded.empty()) out << "skipped (cap exceeded): " << cap_exceeded.size() << '\n';
  out << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

Graph with_pendant_leaf_pair(const Graph& core) {
  EdgeList edges = core.edges();
  const int n = core.num_vertices();
  edges.emplace_back(0, n);
  edges.emplace_back(0, n + 1);
  return Graph(n + 2, std::move(edges));
}

bool SharpnessReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const SharpnessCase& c) { return c.as_expected(); });
}

SharpnessReport verify_free_edge_sharpness() {
  SharpnessReport report;
  auto add = [&](std::string name, Graph g, bool expected_nontrivial) {
    const PropositionVerdict v = proposition_verdict(g);
    report.cases.push_back({std::move(name), std::move(g), v.has_free_edges, v.kernel_order,
                            expected_nontrivial});
  };
  add("theta + pendant leaf pair", with_pendant_leaf_pair(theta_graph()), true);
  add("rose-2 + pendant leaf pair", with_pendant_leaf_pair(rose_graph(2)), true);
  add("theta (control)", theta_graph(), false);
  return report;
}

}  // namespace finact
