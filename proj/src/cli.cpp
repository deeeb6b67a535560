#include "finact/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "finact/automorphism.hpp"
#include "finact/enumeration.hpp"
#include "finact/error.hpp"
#include "finact/finite_group.hpp"
#include "finact/gl2.hpp"
#include "finact/graph.hpp"
#include "finact/homology.hpp"
#include "finact/so3.hpp"
#include "json.hpp"

namespace finact {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// A path to a table file if one exists, otherwise a built-in group name.
FiniteGroup resolve_group(const std::string& name_or_path) {
  if (std::filesystem::is_regular_file(name_or_path)) return parse_group_table(read_file(name_or_path));
  return named_group(name_or_path);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string edge_list(const std::vector<EdgeId>& edges) {
  std::string s = "[";
  for (std::size_t i = 0; i < edges.size(); ++i) s += (i ? "," : "") + std::to_string(edges[i]);
  return s + "]";
}

struct AnalyzeOptions {
  std::string path;
  bool json = false;
};

int analyze(const AnalyzeOptions& opt, std::ostream& out) {
  const Graph g = parse_graph(read_file(opt.path));
  const bool connected = is_connected(g);
  const PropositionVerdict verdict = proposition_verdict(g);
  const AutGroup group = automorphism_group(g);
  const std::vector<EdgeId> free = free_edges(g);

  ordered_json doc;
  doc["graph"] = ordered_json::parse(serialize_graph(g));
  doc["euler_characteristic"] = euler_characteristic(g);
  doc["connected"] = connected;
  doc["genus"] = verdict.genus;
  doc["free_edges"] = free;
  doc["aut_order"] = group.order();

  bool hopf_ok = true;
  auto elements = ordered_json::array();
  if (connected) {
    const CycleBasis basis = cycle_basis(g);
    for (const GraphMap& m : group.elements) {
      const IntMatrix h = homology_matrix(basis, m);
      const HopfCheck hopf = hopf_check(g, m);
      hopf_ok = hopf_ok && hopf.equal;
      ordered_json e;
      e["map"] = ordered_json::parse(to_json(m));
      e["homology_matrix"] = h.rows();
      e["determinant"] = h.determinant();
      e["lefschetz"] = hopf.lefschetz;
      e["chi_fixed"] = hopf.chi_fixed;
      e["hopf_equal"] = hopf.equal;
      e["subdivided"] = hopf.subdivided;
      elements.push_back(std::move(e));
    }
  }
  doc["automorphisms"] = std::move(elements);

  ordered_json v;
  v["genus"] = verdict.genus;
  v["kernel_order"] = verdict.kernel_order;
  v["holds"] = verdict.holds;
  v["witness"] = verdict.witness ? ordered_json::parse(to_json(*verdict.witness)) : ordered_json();
  v["connected"] = verdict.connected;
  v["has_free_edges"] = verdict.has_free_edges;
  v["hypotheses_hold"] = verdict.hypotheses_hold();
  v["group"] = "dart-level automorphisms, edge inversions permitted";
  doc["verdict"] = std::move(v);

  if (opt.json) {
    out << doc.dump(2) << '\n';
  } else {
    out << "graph: " << serialize_graph(g) << '\n'
        << "vertices: " << g.num_vertices() << "  edges: " << g.num_edges() << '\n'
        << "euler characteristic: " << euler_characteristic(g) << '\n'
        << "connected: " << yes_no(connected) << '\n'
        << "genus: " << verdict.genus << '\n'
        << "free edges: " << edge_list(free) << '\n'
        << "|Aut|: " << group.order() << '\n';
    if (!connected) out << "(disconnected: Lefschetz numbers and Hopf checks skipped)\n";
    std::size_t index = 0;
    for (const auto& e : doc["automorphisms"]) {
      out << "element " << index++ << ": " << e["map"].dump() << '\n'
          << "  H1 matrix " << e["homology_matrix"].dump() << "  det " << e["determinant"].get<long long>()
          << '\n'
          << "  L = " << e["lefschetz"].get<long long>() << "  chi(fixed) = " << e["chi_fixed"].get<int>()
          << "  hopf " << (e["hopf_equal"].get<bool>() ? "ok" : "FAILED")
          << (e["subdivided"].get<bool>() ? " (after subdivision)" : "") << '\n';
    }
    out << "kernel order: " << verdict.kernel_order << '\n'
        << "faithful on H1: " << yes_no(verdict.holds) << '\n';
    if (!verdict.hypotheses_hold()) {
      out << "note: outside hypotheses (needs connected, genus >= 2, no free edges)\n";
    }
  }
  if (verdict.is_violation()) return kExitClaimFailed;
  return hopf_ok ? kExitOk : kExitClaimFailed;
}

struct BoundsOptions {
  EnumBounds bounds{4, 6, 2, 4};
  std::string out_path;
  bool json = false;
};

void add_bound_flags(CLI::App* cmd, BoundsOptions& opt) {
  cmd->add_option("--max-vertices", opt.bounds.max_vertices, "largest vertex count (1..6)");
  cmd->add_option("--max-edges", opt.bounds.max_edges, "largest edge count (0..9)");
  cmd->add_option("--min-genus", opt.bounds.min_genus, "smallest genus");
  cmd->add_option("--max-genus", opt.bounds.max_genus, "largest genus");
}

int verify(const BoundsOptions& opt, std::ostream& out, std::ostream& err) {
  opt.bounds.validate();
  const VerificationReport report = verify_proposition(opt.bounds);
  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path);
    if (!file) throw ParseError("cannot write '" + opt.out_path + "'");
    file << report.to_json() << '\n';
  }
  if (opt.json) {
    out << report.to_json() << '\n';
  } else {
    out << report.to_table();
  }
  // Keep stdout pure JSON under --json.
  (opt.json ? err : out) << "summary: " << report.graphs_checked << " graphs, " << report.automorphisms_checked
      << " automorphisms, " << report.proposition_violations.size() << " proposition violations, "
      << report.hopf_violations.size() << " hopf violations, "
      << report.counterexamples_outside_hypotheses.size() << " outside-hypotheses kernels\n";
  return report.passed() ? kExitOk : kExitClaimFailed;
}

int enumerate(const BoundsOptions& opt, std::ostream& out) {
  opt.bounds.validate();
  const std::vector<Graph> graphs = enumerate_graphs(opt.bounds);
  if (opt.json) {
    auto list = ordered_json::array();
    for (const Graph& g : graphs) list.push_back(ordered_json::parse(serialize_graph(g)));
    out << list.dump() << '\n';
  } else {
    for (const Graph& g : graphs) {
      out << canonical_form(g) << "  genus " << genus(g) << "  " << serialize_graph(g) << '\n';
    }
    out << graphs.size() << " classes\n";
  }
  return kExitOk;
}

struct Gl2Options {
  int entry_bound = 2;
  std::size_t cap = 200;
  bool json = false;
};

int gl2(const Gl2Options& opt, std::ostream& out) {
  const Gl2Report report = gl2_torsion_search(opt.entry_bound, opt.cap);
  if (opt.json) {
    out << report.to_json() << '\n';
  } else {
    out << "entry bound: " << report.entry_bound << "  closure cap: " << report.closure_cap << '\n'
        << "torsion elements: " << report.torsion_count << '\n'
        << "finite subgroups: " << report.subgroups.size() << '\n'
        << "finite subgroup orders:";
    for (int o : report.finite_subgroup_orders) out << ' ' << o;
    out << "\nmaximal finite subgroups:\n";
    for (const auto& s : report.subgroups) {
      if (s.maximal) out << "  order " << s.elements.size() << "  " << s.type.short_name() << '\n';
    }
    out << "maximal types:";
    for (const auto& t : report.maximal_types) out << ' ' << t;
    out << "\ninfinite pairs (closure past cap): " << report.infinite_pairs << '\n'
        << "max finite order: " << report.max_order << '\n'
        << (report.matches_known_classification() ? "PASS" : "FAIL") << '\n';
  }
  return report.matches_known_classification() ? kExitOk : kExitClaimFailed;
}

struct GroupOptions {
  std::string group;
  int genus = 0;
  bool json = false;
};

int classify_group(const GroupOptions& opt, std::ostream& out) {
  const FiniteGroup g = resolve_group(opt.group);
  const SO3Class c = classify_so3(g);
  if (opt.json) {
    ordered_json doc;
    doc["order"] = g.order();
    doc["class"] = c.to_string();
    out << doc.dump() << '\n';
  } else {
    out << "order: " << g.order() << "\nclass: " << c.to_string() << '\n';
  }
  return kExitOk;
}

int theorem1(const GroupOptions& opt, std::ostream& out) {
  if (opt.genus < 0) throw PreconditionError("--genus must be non-negative");
  const FiniteGroup g = resolve_group(opt.group);
  const SO3Class c = classify_so3(g);
  std::string verdict = "not applicable (group is not a finite rotation group)";
  std::string bound = "n/a";
  if (c.kind != SO3Class::Kind::kNotSO3) {
    verdict = to_string(theorem1_verdict(opt.genus, c));
    const AttachmentBound b = attachment_bound(c);
    bound = b.bounded ? "at most " + std::to_string(b.max_points) : "unbounded";
  }
  if (opt.json) {
    ordered_json doc;
    doc["genus"] = opt.genus;
    doc["class"] = c.to_string();
    doc["attachment_points"] = bound;
    doc["verdict"] = verdict;
    out << doc.dump() << '\n';
  } else {
    out << "class: " << c.to_string() << "\nattachment points: " << bound << "\nverdict: " << verdict
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite group actions on graphs and their first homology", "finact"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  auto* analyze_cmd = app.add_subcommand("analyze", "genus, automorphisms, homology and Hopf checks for one graph");
  analyze_cmd->add_option("path", analyze_opt.path, "graph JSON file")->required();
  analyze_cmd->add_flag("--json", analyze_opt.json, "machine-readable output");

  BoundsOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify-proposition", "exhaustive homological faithfulness sweep");
  add_bound_flags(verify_cmd, verify_opt);
  verify_cmd->add_option("--out", verify_opt.out_path, "write the JSON report here");
  verify_cmd->add_flag("--json", verify_opt.json, "print the JSON report instead of the table");

  BoundsOptions enum_opt;
  auto* enum_cmd = app.add_subcommand("enumerate", "list isomorphism classes within bounds");
  add_bound_flags(enum_cmd, enum_opt);
  enum_cmd->add_flag("--json", enum_opt.json, "print graphs as a JSON array");

  Gl2Options gl2_opt;
  auto* gl2_cmd = app.add_subcommand("gl2", "finite subgroups generated by small torsion in GL(2,Z)");
  gl2_cmd->add_option("--entry-bound", gl2_opt.entry_bound, "max |entry| of generators (1..3)")
      ->check(CLI::Range(1, 3));
  gl2_cmd->add_option("--cap", gl2_opt.cap, "closure size treated as infinite (24..10000)")
      ->check(CLI::Range(24, 10000));
  gl2_cmd->add_flag("--json", gl2_opt.json, "machine-readable output");

  GroupOptions classify_opt;
  auto* classify_cmd = app.add_subcommand("classify-group", "classify a finite group among rotation groups");
  classify_cmd->add_option("--group", classify_opt.group, "table file or Zn, D<order>, A4, S4, A5, Q8")
      ->required();
  classify_cmd->add_flag("--json", classify_opt.json, "machine-readable output");

  GroupOptions theorem_opt;
  auto* theorem_cmd = app.add_subcommand("theorem1", "classification verdict for a homologically trivial action");
  theorem_cmd->add_option("--genus", theorem_opt.genus, "genus of the closed handle")->required();
  theorem_cmd->add_option("--group", theorem_opt.group, "table file or Zn, D<order>, A4, S4, A5, Q8")
      ->required();
  theorem_cmd->add_flag("--json", theorem_opt.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return analyze(analyze_opt, out);
    if (*verify_cmd) return verify(verify_opt, out, err);
    if (*enum_cmd) return enumerate(enum_opt, out);
    if (*gl2_cmd) return gl2(gl2_opt, out);
    if (*classify_cmd) return classify_group(classify_opt, out);
    if (*theorem_cmd) return theorem1(theorem_opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitClaimFailed;
  }
  return kExitUsage;
}

}  // namespace finact
