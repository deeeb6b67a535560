// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "finact/automorphism.hpp"
#include "finact/cli.hpp"
#include "finact/enumeration.hpp"
#include "finact/error.hpp"
#include "finact/gl2.hpp"
#include "finact/homology.hpp"
#include "finact/so3.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "property_checks.hpp"

using namespace finact;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "finact");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

json cli_report(const std::vector<std::string>& bound_args, int& code) {
  const auto path = (std::filesystem::temp_directory_path() / "finact_acceptance_report.json").string();
  std::vector<std::string> args{"verify-proposition"};
  args.insert(args.end(), bound_args.begin(), bound_args.end());
  args.insert(args.end(), {"--out", path});
  code = cli(args).code;
  std::ifstream in(path);
  return json::parse(in);
}

const std::vector<std::string> kHeadline = {"--max-vertices", "4", "--max-edges", "6", "--min-genus", "2",
                                            "--max-genus", "4"};

Outcome sweep() {
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  const json report = cli_report(kHeadline, code);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::map<int, int> per_genus;
  for (const auto& cell : report["census"]) per_genus[cell["genus"].get<int>()] += cell["classes"].get<int>();
  bool cells_ok = true;
  for (int genus = 2; genus <= 4; ++genus) cells_ok = cells_ok && per_genus[genus] >= 1;
  const bool ok = code == kExitOk && cells_ok && report["proposition_violations"].empty() &&
                  report["hopf_violations"].empty() && seconds < 300;
  std::ostringstream d;
  d << report["graphs_checked"] << " graphs (genus 2/3/4: " << per_genus[2] << "/" << per_genus[3] << "/"
    << per_genus[4] << "), " << report["proposition_violations"].size() << " proposition violations, "
    << report["hopf_violations"].size() << " hopf violations, " << seconds << " s";
  return {ok, d.str()};
}

Outcome sharpness() {
  int code = 0;
  std::vector<std::string> args = kHeadline;
  args[5] = "1";
  const json report = cli_report(args, code);
  std::map<std::string, std::size_t> found;
  for (const auto& f : report["counterexamples_outside_hypotheses"]) {
    found[f["signature"].get<std::string>()] = f["kernel_order"].get<std::size_t>();
  }
  bool ok = code == kExitOk;
  std::ostringstream d;
  // The single loop has automorphism group Z/2 acting by -1: no rotation
  // kernel to find.
  const Graph c1 = cycle_graph(1);
  ok = ok && homology_kernel(cycle_basis(c1), automorphism_group(c1)).order() == 1 &&
       !found.count(canonical_form(c1));
  for (int n = 2; n <= 4; ++n) {
    const auto it = found.find(canonical_form(cycle_graph(n)));
    const bool hit = it != found.end() && it->second == static_cast<std::size_t>(n);
    ok = ok && hit;
    d << "C" << n << (hit ? " kernel " + std::to_string(n) : " missing") << "; ";
  }
  const SharpnessReport pendant = verify_free_edge_sharpness();
  for (const SharpnessCase& c : pendant.cases) {
    if (!c.expected_nontrivial) continue;
    ok = ok && c.has_free_edges && c.kernel_order >= 2;
    d << c.name << " kernel " << c.kernel_order << "; ";
  }
  ok = ok && pendant.passed();
  return {ok, d.str()};
}

// chi of the fixed subgraph counted directly: fixed vertices minus edges
// whose positive dart is fixed.
int fixed_euler_by_hand(const Graph& g, const GraphMap& m) {
  int chi = 0;
  for (int v = 0; v < g.num_vertices(); ++v) chi += m.vertex_map[v] == v;
  for (int e = 0; e < g.num_edges(); ++e) chi -= m.dart_map[2 * e] == 2 * e;
  return chi;
}

Outcome hopf() {
  std::size_t checked = 0, subdivided = 0, failures = 0;
  for (const Graph& g : enumerate_graphs({4, 6, 2, 4})) {
    const CycleBasis basis = cycle_basis(g);
    const Subdivision sub = subdivide_all(g);
    const CycleBasis sub_basis = cycle_basis(sub.graph);
    for (const GraphMap& m : automorphism_group(g).elements) {
      long long lefschetz = 1 - homology_matrix(basis, m).trace();
      int chi = 0;
      if (inverted_edges(m).empty()) {
        chi = fixed_euler_by_hand(g, m);
      } else {
        const GraphMap fine = subdivided_map(m, sub);
        if (!inverted_edges(fine).empty()) ++failures;
        lefschetz = 1 - homology_matrix(sub_basis, fine).trace();
        chi = fixed_euler_by_hand(sub.graph, fine);
        ++subdivided;
      }
      const HopfCheck lib = hopf_check(g, m);
      if (lefschetz != chi || !lib.equal || lib.lefschetz != lefschetz || lib.chi_fixed != chi) ++failures;
      ++checked;
    }
  }
  std::ostringstream d;
  d << checked << " automorphisms (" << subdivided << " via subdivision), " << failures << " mismatches";
  return {failures == 0 && checked > 0, d.str()};
}

Outcome rose() {
  bool ok = true;
  std::ostringstream d;
  long long expected = 1;
  for (int g = 1; g <= 5; ++g) {
    expected *= 2 * g;
    const Graph r = rose_graph(g);
    const AutGroup aut = automorphism_group(r);
    const CycleBasis b = cycle_basis(r);
    std::set<IntMatrix> image;
    for (const GraphMap& m : aut.elements) image.insert(homology_matrix(b, m));
    const auto signed_perms = signed_permutation_group(g).matrices;
    const bool here = static_cast<long long>(aut.order()) == expected &&
                      image == std::set<IntMatrix>(signed_perms.begin(), signed_perms.end()) &&
                      homology_kernel(b, aut).order() == 1;
    ok = ok && here;
    d << "g=" << g << " |Aut|=" << aut.order() << (here ? "" : " MISMATCH") << "; ";
  }
  return {ok, d.str()};
}

Outcome gl2() {
  const CliRun run = cli({"gl2", "--entry-bound", "2", "--cap", "200", "--json"});
  const json doc = json::parse(run.out);
  const auto orders = doc["finite_subgroup_orders"].get<std::vector<int>>();
  const Gl2Report report = gl2_torsion_search(2, 200);
  std::multiset<std::size_t> maximal_orders;
  for (const Gl2Subgroup& s : report.subgroups) {
    if (s.maximal) maximal_orders.insert(s.elements.size());
  }
  const std::set<std::size_t> distinct(maximal_orders.begin(), maximal_orders.end());
  const bool ok = run.code == kExitOk && doc["maximal_types"] == json::array({"D6", "D4"}) &&
                  distinct == std::set<std::size_t>{8, 12} && !orders.empty() && orders.back() == 12;
  std::ostringstream d;
  d << "maximal types " << doc["maximal_types"].dump() << ", largest finite order " << orders.back() << ", "
    << doc["infinite_pairs"] << " infinite pairs";
  return {ok, d.str()};
}

Outcome theorem1() {
  using Kind = SO3Class::Kind;
  std::set<Kind> covered;
  std::size_t rows = 0;
  bool ok = true;
  std::vector<SO3Class> classes;
  for (int n = 1; n <= 24; ++n) classes.push_back(SO3Class::cyclic(n));
  for (int order = 4; order <= 48; order += 2) classes.push_back(SO3Class::dihedral(order));
  classes.push_back(SO3Class::tetrahedral());
  classes.push_back(SO3Class::octahedral());
  classes.push_back(SO3Class::icosahedral());
  for (const SO3Class& c : classes) {
    covered.insert(c.kind);
    const Theorem1Verdict want =
        c.kind == Kind::kCyclic ? Theorem1Verdict::kConsistentCyclic : Theorem1Verdict::kContradiction;
    for (int genus = 2; genus <= 10; ++genus) {
      ok = ok && theorem1_verdict(genus, c) == want;
      ++rows;
    }
  }
  covered.insert(Kind::kNotSO3);
  for (int genus = 2; genus <= 10; ++genus) {
    try {
      theorem1_verdict(genus, SO3Class::not_so3(8));
      ok = false;
    } catch (const PreconditionError&) {
    }
    ++rows;
  }
  ok = ok && covered.size() == 6;
  return {ok, std::to_string(rows) + " table rows, " + std::to_string(covered.size()) + "/6 kinds covered"};
}

Outcome algebra() {
  constexpr std::size_t kCases = 10'000;
  const auto all = props::samples({4, 6, 0, 4});
  std::mt19937 rng(20261019);
  const props::Tally tallies[] = {props::functoriality(all, kCases, rng), props::unit_determinant(all, kCases, rng),
                                  props::basis_independence(all, kCases, rng),
                                  props::subdivision_invariance(all, kCases, rng)};
  const char* names[] = {"functoriality", "det", "basis", "subdivision"};
  bool ok = true;
  std::ostringstream d;
  for (int i = 0; i < 4; ++i) {
    ok = ok && tallies[i].passed(kCases);
    d << names[i] << " " << tallies[i].cases - tallies[i].failures << "/" << tallies[i].cases << "; ";
    if (tallies[i].failures) d << "first failure " << tallies[i].first_failure << "; ";
  }
  return {ok, d.str()};
}

Outcome oracle_equivalence() {
  // Up to isomorphism: every multigraph with at most 4 edges on at most 6
  // vertices, plus the 7- and 8-vertex ones without isolated vertices.
  std::map<std::string, Graph> classes;
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= 4; ++m) {
      for (const Graph& g : oracle::labeled_multigraphs(n, m)) classes.emplace(canonical_form(g), g);
    }
  }
  std::vector<Graph> graphs;
  for (const auto& [sig, g] : classes) graphs.push_back(g);
  graphs.emplace_back(7, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {3, 4}, {5, 6}});
  graphs.emplace_back(8, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  std::size_t mismatches = 0;
  std::size_t elements = 0;
  std::string first;
  for (const Graph& g : graphs) {
    const auto brute = oracle::all_bijection_automorphisms(g);
    const auto lib = automorphism_group(g).elements;
    std::vector<GraphMap> sorted = lib;
    std::sort(sorted.begin(), sorted.end());
    elements += brute.size();
    if (sorted != brute && mismatches++ == 0) first = serialize_graph(g);
  }
  std::ostringstream d;
  d << graphs.size() << " graphs, " << elements << " automorphisms, " << mismatches << " mismatches";
  if (mismatches) d << " (first " << first << ")";
  return {mismatches == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 proposition sweep", sweep},
      {"2 sharpness", sharpness},
      {"3 hopf trace formula", hopf},
      {"4 rose automorphisms", rose},
      {"5 gl2 finite subgroups", gl2},
      {"6 theorem1 verdict table", theorem1},
      {"7 algebraic properties", algebra},
      {"8 oracle equivalence", oracle_equivalence},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o{false, ""};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size()
            << std::endl;
  return failed ? 1 : 0;
}
