#include "pmctw/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmctw/connected_sets.hpp"
#include "pmctw/generators.hpp"
#include "pmctw/graph_io.hpp"
#include "pmctw/oracles.hpp"
#include "pmctw/pmc.hpp"
#include "pmctw/polyspace.hpp"
#include "pmctw/selfcheck.hpp"
#include "pmctw/separators.hpp"
#include "pmctw/treewidth_dp.hpp"

namespace pmctw::cli {

namespace {

using nlohmann::json;

/// Invalid input or flag combination; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input = "-";
  bool json = false;
  int threads = 1;
  int verbosity = 0;

  // treewidth
  bool exact = false;
  std::optional<int> at_most;
  bool find_k = false;
  bool polyspace = false;
  std::optional<double> alpha;
  std::string emit_td;
  std::string emit_triangulation;

  // enumeration / listing
  std::optional<int> root;
  int b = 0;
  int f = 0;
  bool at_most_boundary = false;
  std::optional<int> max_size;
  bool nice_only = false;
  bool count_only = false;

  // oracle
  std::string oracle_quantity;

  // validate
  std::string td_path;

  // selfcheck / generate
  int n_max = 8;
  int trials = 20;
  std::uint64_t seed = 1;
  int gen_n = 10;
  double gen_p = 0.3;
  bool gen_tree = false;
};

std::string set_line(const VertexSet& s) {
  std::ostringstream out;
  bool first = true;
  for (int v : s) {
    out << (first ? "" : " ") << v + 1;
    first = false;
  }
  return out.str();
}

json set_json(const VertexSet& s) {
  json arr = json::array();
  for (int v : s) arr.push_back(v + 1);
  return arr;
}

Graph load_graph(const RunConfig& cfg, std::istream& in) {
  try {
    if (cfg.input == "-") {
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_graph(ss.str());
    }
    return read_graph_file(cfg.input);
  } catch (const ParseError& e) {
    throw UsageError(cfg.input + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw UsageError("vertex " + std::to_string(v + 1) + " is not in the graph");
}

int cmd_treewidth(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  int modes = (cfg.exact ? 1 : 0) + (cfg.at_most ? 1 : 0) + (cfg.find_k ? 1 : 0) + (cfg.polyspace ? 1 : 0);
  if (modes > 1) throw UsageError("choose one of --exact, --at-most, --find-k, --polyspace");
  if (cfg.alpha && !cfg.polyspace) throw UsageError("--alpha only applies to --polyspace");
  if (cfg.at_most && *cfg.at_most < 0) throw UsageError("--at-most must be non-negative");

  if (cfg.polyspace) {
    if (!cfg.emit_td.empty() || !cfg.emit_triangulation.empty()) {
      throw UsageError("--polyspace computes the width only; it cannot emit a decomposition");
    }
    PolySpaceConfig pcfg = cfg.alpha ? PolySpaceConfig::with_alpha(*cfg.alpha) : PolySpaceConfig{};
    try {
      pcfg.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    auto res = polyspace_treewidth(g, pcfg);
    const auto& st = res.stats;
    if (cfg.json) {
      out << json{{"command", "treewidth"},
                  {"mode", "polyspace"},
                  {"treewidth", res.width},
                  {"stats",
                   {{"branch_a_candidates", st.branch_a_candidates},
                    {"branch_b_candidates", st.branch_b_candidates},
                    {"leaf_bag_calls", st.leaf_bag_calls},
                    {"max_recursion_depth", st.max_recursion_depth},
                    {"max_enumeration_depth", st.max_enumeration_depth},
                    {"peak_live_sets", st.peak_live_sets}}}}
                 .dump()
          << '\n';
    } else {
      out << res.width << '\n';
      out << "c branch_a_candidates " << st.branch_a_candidates << '\n';
      out << "c branch_b_candidates " << st.branch_b_candidates << '\n';
      out << "c leaf_bag_calls " << st.leaf_bag_calls << '\n';
      out << "c max_recursion_depth " << st.max_recursion_depth << '\n';
      out << "c max_enumeration_depth " << st.max_enumeration_depth << '\n';
      out << "c peak_live_sets " << st.peak_live_sets << '\n';
    }
    return kExitOk;
  }

  std::optional<TreewidthSolution> sol;
  std::string mode = "exact";
  int attempts = 0;
  if (cfg.at_most) {
    mode = "at-most";
    sol = decide_treewidth_at_most_k(g, *cfg.at_most);
  } else if (cfg.find_k) {
    mode = "find-k";
    sol = treewidth_by_k_scan(g, &attempts);
  } else {
    sol = exact_treewidth(g);
  }

  if (!sol) {
    if (cfg.json) {
      out << json{{"command", "treewidth"}, {"mode", mode}, {"k", *cfg.at_most}, {"verdict", "greater"}}.dump()
          << '\n';
    } else {
      out << "treewidth > " << *cfg.at_most << '\n';
    }
    return kExitVerdict;
  }
  if (!cfg.emit_td.empty()) write_file(cfg.emit_td, write_decomposition(sol->decomposition, g.n()));
  if (!cfg.emit_triangulation.empty()) write_file(cfg.emit_triangulation, write_edge_list(sol->triangulation));
  if (cfg.json) {
    json j{{"command", "treewidth"}, {"mode", mode}, {"treewidth", sol->width},
           {"bags", sol->decomposition.bags.size()}};
    if (cfg.at_most) j["k"] = *cfg.at_most;
    if (cfg.find_k) j["attempts"] = attempts;
    out << j.dump() << '\n';
  } else {
    out << sol->width << '\n';
  }
  return kExitOk;
}

void print_records(const RunConfig& cfg, const char* command, const std::vector<ConnectedSetRecord>& recs,
                   std::ostream& out) {
  if (cfg.json) {
    json items = json::array();
    for (const auto& r : recs) items.push_back({{"set", set_json(r.set)}, {"boundary", set_json(r.boundary)}});
    out << json{{"command", command}, {"count", recs.size()}, {"records", items}}.dump() << '\n';
    return;
  }
  if (cfg.count_only) {
    out << recs.size() << '\n';
    return;
  }
  for (const auto& r : recs) out << set_line(r.set) << " | " << set_line(r.boundary) << '\n';
}

int cmd_enum_connected(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  if (cfg.b < 0 || cfg.f < 0) throw UsageError("--b and --f must be non-negative");
  ConnectedSetQuery q;
  if (cfg.root) {
    check_vertex(g, *cfg.root - 1);
    q.root = *cfg.root - 1;
  }
  q.b = cfg.b;
  q.f = cfg.f;
  q.mode = cfg.at_most_boundary ? BoundaryMode::at_most : BoundaryMode::exact;
  print_records(cfg, "enum-connected", run_query(g, q), out);
  return kExitOk;
}

void print_family(const RunConfig& cfg, const char* command, const std::vector<VertexSet>& family,
                  std::ostream& out) {
  std::map<int, std::size_t> hist;
  for (const auto& s : family) ++hist[s.size()];
  if (cfg.json) {
    json h = json::object();
    for (auto [size, count] : hist) h[std::to_string(size)] = count;
    json j{{"command", command}, {"count", family.size()}, {"size_histogram", h}};
    if (!cfg.count_only) {
      json items = json::array();
      for (const auto& s : family) items.push_back(set_json(s));
      j["sets"] = items;
    }
    out << j.dump() << '\n';
    return;
  }
  if (cfg.count_only) {
    out << family.size() << '\n';
    for (auto [size, count] : hist) out << "c size " << size << ' ' << count << '\n';
    return;
  }
  for (const auto& s : family) out << set_line(s) << '\n';
}

int cmd_list_separators(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  if (cfg.max_size && *cfg.max_size < 0) throw UsageError("--max-size must be non-negative");
  SeparatorFamily fam = cfg.max_size ? list_minimal_separators_bounded(g, *cfg.max_size) : list_minimal_separators(g);
  print_family(cfg, "list-separators", fam.sets(), out);
  return kExitOk;
}

int cmd_list_pmcs(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  if (cfg.max_size && *cfg.max_size < 0) throw UsageError("--max-size must be non-negative");
  std::vector<PotentialMaximalClique> found = cfg.nice_only ? nice_pmcs(g, cfg.max_size) : list_pmcs(g, cfg.max_size);
  std::vector<VertexSet> family;
  for (const auto& p : found) family.push_back(p.set);
  print_family(cfg, "list-pmcs", family, out);
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  try {
    const std::string& q = cfg.oracle_quantity;
    if (q == "treewidth") {
      int tw = oracle::treewidth(g);
      if (cfg.json) {
        out << json{{"command", "oracle"}, {"quantity", q}, {"treewidth", tw}}.dump() << '\n';
      } else {
        out << tw << '\n';
      }
    } else if (q == "separators") {
      print_family(cfg, "oracle", oracle::minimal_separators(g), out);
    } else if (q == "pmcs") {
      print_family(cfg, "oracle", cfg.nice_only ? oracle::nice_pmcs(g) : oracle::pmcs(g), out);
    } else if (q == "connected") {
      if (!cfg.root) throw UsageError("oracle connected needs --root");
      check_vertex(g, *cfg.root - 1);
      std::vector<ConnectedSetRecord> recs;
      for (const auto& s : oracle::connected_sets(g, *cfg.root - 1, cfg.b, cfg.f)) {
        recs.push_back({s, neighborhood(g, s)});
      }
      print_records(cfg, "oracle", recs, out);
    } else {
      throw UsageError("unknown oracle quantity '" + q + "'");
    }
  } catch (const oracle::LimitError& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  std::ifstream f(cfg.td_path);
  if (!f) throw UsageError("cannot open '" + cfg.td_path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  TreeDecomposition td;
  try {
    td = parse_decomposition(ss.str());
  } catch (const ParseError& e) {
    throw UsageError(cfg.td_path + ": " + e.what());
  }
  auto problem = check_decomposition(g, td);
  if (cfg.json) {
    json j{{"command", "validate"}, {"valid", !problem}, {"width", td.width()}};
    if (problem) j["reason"] = *problem;
    out << j.dump() << '\n';
  } else if (problem) {
    out << "invalid: " << *problem << '\n';
  } else {
    out << "valid width " << td.width() << '\n';
  }
  return problem ? kExitVerdict : kExitOk;
}

int cmd_selfcheck(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_max < 0 || cfg.trials < 0 || cfg.threads < 1) throw UsageError("selfcheck limits must be non-negative");
  SelfcheckOptions opts;
  opts.n_max = cfg.n_max;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;
  auto report = run_selfcheck(opts);
  if (cfg.json) {
    out << json{{"command", "selfcheck"},
                {"pass", report.pass},
                {"graphs", report.rows.size()},
                {"failures", report.failures},
                {"rooted_queries", report.rooted_queries},
                {"max_count_over_bound", report.connected_ratio},
                {"max_separator_base", report.separator_base},
                {"max_pmc_base", report.pmc_base}}
               .dump()
        << '\n';
  } else {
    out << format_selfcheck(report);
  }
  return report.pass ? kExitOk : kExitVerdict;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.gen_n < 1 || cfg.gen_n > kMaxVertices) throw UsageError("--n out of range");
  if (cfg.gen_p < 0.0 || cfg.gen_p > 1.0) throw UsageError("--p must lie in [0, 1]");
  Graph g = cfg.gen_tree ? gen::random_tree(cfg.gen_n, cfg.seed) : gen::erdos_renyi(cfg.gen_n, cfg.gen_p, cfg.seed);
  out << write_graph(g);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact treewidth via minimal separators and potential maximal cliques"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--threads", cfg.threads, "Worker cap (self-check)")->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", cfg.verbosity, "Report timing on stderr");

  auto* tw = app.add_subcommand("treewidth", "Compute or bound the treewidth");
  tw->add_option("input", cfg.input, "Graph file (.gr), '-' for stdin");
  tw->add_flag("--exact", cfg.exact, "Exponential-space exact computation (default)");
  tw->add_option("--at-most", cfg.at_most, "Decide tw <= k; exit 1 when tw > k");
  tw->add_flag("--find-k", cfg.find_k, "Scan k = 1, 2, ... with the bounded pipeline");
  tw->add_flag("--polyspace", cfg.polyspace, "Polynomial-space computation (width only)");
  tw->add_option("--alpha", cfg.alpha, "Branch split threshold for --polyspace");
  tw->add_option("--emit-td", cfg.emit_td, "Write the decomposition (.td)");
  tw->add_option("--emit-triangulation", cfg.emit_triangulation, "Write the triangulation edge list");

  auto* ec = app.add_subcommand("enum-connected", "Enumerate connected sets by size and boundary");
  ec->add_option("input", cfg.input, "Graph file (.gr), '-' for stdin");
  ec->add_option("--root", cfg.root, "Root vertex (1-indexed); omit for all roots");
  ec->add_option("--b", cfg.b, "Sets have b+1 vertices")->required();
  ec->add_option("--f", cfg.f, "Boundary size")->required();
  ec->add_flag("--at-most", cfg.at_most_boundary, "Boundary size at most f");
  ec->add_flag("--count-only", cfg.count_only, "Print the count only");

  auto* ls = app.add_subcommand("list-separators", "List minimal separators");
  ls->add_option("input", cfg.input, "Graph file (.gr), '-' for stdin");
  ls->add_option("--max-size", cfg.max_size, "Only separators of size <= k");
  ls->add_flag("--count-only", cfg.count_only, "Print the count and size histogram");

  auto* lp = app.add_subcommand("list-pmcs", "List potential maximal cliques");
  lp->add_option("input", cfg.input, "Graph file (.gr), '-' for stdin");
  lp->add_option("--max-size", cfg.max_size, "Only PMCs of size <= k");
  lp->add_flag("--nice-only", cfg.nice_only, "Only nice PMCs");
  lp->add_flag("--count-only", cfg.count_only, "Print the count and size histogram");

  auto* orc = app.add_subcommand("oracle", "Brute-force ground truth");
  orc->add_option("quantity", cfg.oracle_quantity, "treewidth | separators | pmcs | connected")
      ->required()
      ->check(CLI::IsMember({"treewidth", "separators", "pmcs", "connected"}));
  orc->add_option("input", cfg.input, "Graph file (.gr), '-' for stdin");
  orc->add_option("--root", cfg.root, "Root vertex for 'connected' (1-indexed)");
  orc->add_option("--b", cfg.b, "Sets have b+1 vertices");
  orc->add_option("--f", cfg.f, "Boundary size");
  orc->add_flag("--nice-only", cfg.nice_only, "Only nice PMCs");
  orc->add_flag("--count-only", cfg.count_only, "Print the count only");

  auto* val = app.add_subcommand("validate", "Check a tree decomposition against a graph");
  val->add_option("input", cfg.input, "Graph file (.gr)")->required();
  val->add_option("td", cfg.td_path, "Decomposition file (.td)")->required();

  auto* sc = app.add_subcommand("selfcheck", "Oracle-equivalence run on generated graphs");
  sc->add_option("--n-max", cfg.n_max, "Largest graph size");
  sc->add_option("--trials", cfg.trials, "Random graphs");
  sc->add_option("--seed", cfg.seed, "Generator seed");

  auto* gn = app.add_subcommand("generate", "Write a seeded random graph (.gr)");
  gn->add_option("--n", cfg.gen_n, "Vertex count");
  gn->add_option("--p", cfg.gen_p, "Edge probability");
  gn->add_option("--seed", cfg.seed, "Generator seed");
  gn->add_flag("--tree", cfg.gen_tree, "Uniform random tree instead of G(n, p)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    const auto started = std::chrono::steady_clock::now();
    int code = kExitOk;
    if (*sc) {
      code = cmd_selfcheck(cfg, out);
    } else if (*gn) {
      code = cmd_generate(cfg, out);
    } else {
      Graph g = load_graph(cfg, in);
      if (*tw) code = cmd_treewidth(cfg, g, out);
      else if (*ec) code = cmd_enum_connected(cfg, g, out);
      else if (*ls) code = cmd_list_separators(cfg, g, out);
      else if (*lp) code = cmd_list_pmcs(cfg, g, out);
      else if (*orc) code = cmd_oracle(cfg, g, out);
      else if (*val) code = cmd_validate(cfg, g, out);
    }
    if (cfg.verbosity > 0) {
      std::chrono::duration<double> took = std::chrono::steady_clock::now() - started;
      err << "c elapsed " << took.count() << " s\n";
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace pmctw::cli
