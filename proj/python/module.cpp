#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pmctw/connected_sets.hpp"
#include "pmctw/graph_io.hpp"
#include "pmctw/oracles.hpp"
#include "pmctw/pmc.hpp"
#include "pmctw/polyspace.hpp"
#include "pmctw/separators.hpp"
#include "pmctw/tree_decomposition.hpp"
#include "pmctw/treewidth_dp.hpp"

namespace py = pybind11;
using namespace pmctw;

namespace {

std::vector<int> to_list(const VertexSet& s) { return s.members(); }

std::vector<std::vector<int>> to_lists(const std::vector<VertexSet>& family) {
  std::vector<std::vector<int>> out;
  out.reserve(family.size());
  for (const auto& s : family) out.push_back(s.members());
  return out;
}

VertexSet from_list(const Graph& g, const std::vector<int>& members) {
  VertexSet s;
  for (int v : members) {
    if (v < 0 || v >= g.n()) throw py::index_error("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

py::dict solution_dict(const TreewidthSolution& sol) {
  py::dict d;
  d["width"] = sol.width;
  d["bags"] = to_lists(sol.decomposition.bags);
  d["tree_edges"] = sol.decomposition.edges;
  d["triangulation"] = sol.triangulation;
  return d;
}

TreeDecomposition decomposition_from(const Graph& g, const std::vector<std::vector<int>>& bags,
                                     const std::vector<std::pair<int, int>>& edges) {
  TreeDecomposition td;
  for (const auto& b : bags) td.bags.push_back(from_list(g, b));
  td.edges = edges;
  return td;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact treewidth via minimal separators and potential maximal cliques";

  py::register_exception<oracle::LimitError>(m, "OracleLimitError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph", "Simple undirected graph on vertices 0..n-1")
      .def(py::init([](int n, const std::vector<Edge>& edges) {
             if (n < 0 || n > kMaxVertices) throw py::value_error("n must lie in [0, 256]");
             return Graph(n, edges);
           }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, int v) {
        if (v < 0 || v >= g.n()) throw py::index_error("vertex out of range");
        return to_list(g.neighbors(v));
      })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"),
        "Parse PACE .gr text (1-indexed ids) into a Graph");
  m.def("write_graph", &write_graph, py::arg("graph"));

  m.def(
      "treewidth",
      [](const Graph& g) {
        TreewidthSolution sol;
        {
          py::gil_scoped_release release;
          sol = exact_treewidth(g);
        }
        return solution_dict(sol);
      },
      py::arg("graph"), "Exact treewidth with a witnessing decomposition and triangulation");
  m.def(
      "treewidth_at_most",
      [](const Graph& g, int k) -> py::object {
        std::optional<TreewidthSolution> sol;
        {
          py::gil_scoped_release release;
          sol = decide_treewidth_at_most_k(g, k);
        }
        if (!sol) return py::none();
        return solution_dict(*sol);
      },
      py::arg("graph"), py::arg("k"), "Decomposition of width <= k, or None when tw > k");
  m.def(
      "treewidth_polyspace",
      [](const Graph& g, double alpha, bool stop_at_lower_bound) {
        PolySpaceConfig cfg = PolySpaceConfig::with_alpha(alpha);
        cfg.stop_at_lower_bound = stop_at_lower_bound;
        cfg.validate();
        PolySpaceResult res;
        {
          py::gil_scoped_release release;
          res = polyspace_treewidth(g, cfg);
        }
        py::dict stats;
        stats["branch_a_candidates"] = res.stats.branch_a_candidates;
        stats["branch_b_candidates"] = res.stats.branch_b_candidates;
        stats["leaf_bag_calls"] = res.stats.leaf_bag_calls;
        stats["max_recursion_depth"] = res.stats.max_recursion_depth;
        stats["max_enumeration_depth"] = res.stats.max_enumeration_depth;
        stats["peak_live_sets"] = res.stats.peak_live_sets;
        py::dict d;
        d["width"] = res.width;
        d["stats"] = stats;
        return d;
      },
      py::arg("graph"), py::arg("alpha") = PolySpaceConfig{}.alpha_split, py::arg("stop_at_lower_bound") = true,
      "Treewidth in polynomial space (width and search statistics)");

  m.def(
      "minimal_separators",
      [](const Graph& g, std::optional<int> max_size) {
        return to_lists(max_size ? list_minimal_separators_bounded(g, *max_size).sets()
                                 : list_minimal_separators(g).sets());
      },
      py::arg("graph"), py::arg("max_size") = py::none());
  m.def(
      "pmcs",
      [](const Graph& g, std::optional<int> max_size, bool nice_only) {
        auto found = nice_only ? nice_pmcs(g, max_size) : list_pmcs(g, max_size);
        std::vector<VertexSet> sets;
        for (const auto& p : found) sets.push_back(p.set);
        return to_lists(sets);
      },
      py::arg("graph"), py::arg("max_size") = py::none(), py::arg("nice_only") = false,
      "Potential maximal cliques in canonical order");
  m.def(
      "is_pmc", [](const Graph& g, const std::vector<int>& k) { return is_pmc(g, from_list(g, k)).has_value(); },
      py::arg("graph"), py::arg("vertices"));
  m.def(
      "connected_sets",
      [](const Graph& g, std::optional<int> root, int b, int f, bool at_most) {
        if (root && (*root < 0 || *root >= g.n())) throw py::index_error("root out of range");
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto& r : run_query(g, {root, b, f, at_most ? BoundaryMode::at_most : BoundaryMode::exact})) {
          out.emplace_back(to_list(r.set), to_list(r.boundary));
        }
        return out;
      },
      py::arg("graph"), py::arg("root") = py::none(), py::arg("b") = 0, py::arg("f") = 0, py::arg("at_most") = false,
      "Connected sets of b+1 vertices with f neighbors, as (set, boundary) pairs");
  m.def("count_bound", [](int b, int f) { return count_bound(b, f).str(); }, py::arg("b"), py::arg("f"),
        "C(b+f, b) as a decimal string");

  m.def(
      "check_decomposition",
      [](const Graph& g, const std::vector<std::vector<int>>& bags, const std::vector<std::pair<int, int>>& edges) {
        return check_decomposition(g, decomposition_from(g, bags, edges));
      },
      py::arg("graph"), py::arg("bags"), py::arg("tree_edges"),
      "None when valid, otherwise a description of the first violation");

  auto orc = m.def_submodule("oracle", "Brute-force ground truth for small graphs");
  orc.def("treewidth", &oracle::treewidth, py::arg("graph"));
  orc.def("minimal_separators", [](const Graph& g) { return to_lists(oracle::minimal_separators(g)); },
          py::arg("graph"));
  orc.def("pmcs", [](const Graph& g) { return to_lists(oracle::pmcs(g)); }, py::arg("graph"));
  orc.def("nice_pmcs", [](const Graph& g) { return to_lists(oracle::nice_pmcs(g)); }, py::arg("graph"));
  orc.def(
      "connected_sets",
      [](const Graph& g, int v, int b, int f) { return to_lists(oracle::connected_sets(g, v, b, f)); },
      py::arg("graph"), py::arg("root"), py::arg("b"), py::arg("f"));
}
