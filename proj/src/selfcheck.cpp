#include "pmctw/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "pmctw/connected_sets.hpp"
#include "pmctw/generators.hpp"
#include "pmctw/oracles.hpp"
#include "pmctw/pmc.hpp"
#include "pmctw/polyspace.hpp"
#include "pmctw/separators.hpp"
#include "pmctw/treewidth_dp.hpp"

namespace pmctw {

namespace {

struct GraphOutcome {
  FamilyCounts counts;
  std::vector<std::string> failures;
  double connected_ratio = 0.0;
  long long rooted_queries = 0;
};

std::vector<VertexSet> sets_of(const std::vector<ConnectedSetRecord>& recs) {
  std::vector<VertexSet> out;
  for (const auto& r : recs) out.push_back(r.set);
  std::sort(out.begin(), out.end());
  return out;
}

GraphOutcome check_graph(const gen::NamedGraph& item, bool inject_fault) {
  const Graph& g = item.graph;
  GraphOutcome out;
  out.counts.graph = item.name;
  out.counts.n = g.n();
  auto fail = [&](const std::string& what) { out.failures.push_back(item.name + ": " + what); };
  const int n = g.n();

  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < n; ++b) {
      for (int f = 0; f + b + 1 <= n; ++f) {
        std::vector<ConnectedSetRecord> recs;
        auto stream = enumerate_rooted(g, v, b, f);
        drain(stream, [&](const ConnectedSetRecord& r) { recs.push_back(r); });
        ++out.rooted_queries;
        BigInt bound = count_bound(b, f);
        if (BigInt(recs.size()) > bound) fail("rooted count exceeds C(b+f,b)");
        out.connected_ratio =
            std::max(out.connected_ratio, static_cast<double>(recs.size()) / bound.convert_to<double>());
        if (sets_of(recs) != oracle::connected_sets(g, v, b, f)) fail("rooted enumeration differs from oracle");
      }
    }
  }

  auto truth_seps = oracle::minimal_separators(g);
  auto seps = list_minimal_separators(g);
  auto bounded = list_minimal_separators_bounded(g, n);
  auto listed = seps.sets();
  auto listed_bounded = bounded.sets();
  if (inject_fault && !listed.empty()) {
    listed.pop_back();
    listed_bounded.pop_back();
  }
  if (listed != truth_seps) fail("separator listing differs from oracle");
  if (listed_bounded != truth_seps) fail("bounded separator listing differs from oracle");
  out.counts.separators = truth_seps.size();

  auto truth_pmcs = oracle::pmcs(g);
  std::vector<VertexSet> pmc_sets;
  for (const auto& p : list_pmcs(g)) pmc_sets.push_back(p.set);
  if (pmc_sets != truth_pmcs) fail("PMC listing differs from oracle");
  out.counts.pmcs = truth_pmcs.size();

  const int tw = oracle::treewidth(g);
  out.counts.treewidth = tw;
  auto exact = exact_treewidth(g);
  if (exact.width != tw) fail("exact treewidth differs from oracle");
  if (!validate_decomposition(g, exact.decomposition) || exact.decomposition.width() != exact.width) {
    fail("exact decomposition invalid");
  }
  for (int k = 0; k < std::max(1, n); ++k) {
    auto sol = decide_treewidth_at_most_k(g, k);
    if (sol.has_value() != (k >= tw)) fail("decision verdict wrong at k=" + std::to_string(k));
    if (sol && (!validate_decomposition(g, sol->decomposition) || sol->width > k)) {
      fail("decision decomposition invalid at k=" + std::to_string(k));
    }
  }
  if (n <= 10 && treewidth_polyspace(g) != tw) fail("polynomial-space width differs from oracle");
  return out;
}

}  // namespace

SelfcheckReport run_selfcheck(const SelfcheckOptions& options) {
  SelfcheckReport report;
  const int n_max = std::min(options.n_max, oracle::kFamilyLimit);
  if (n_max <= 0) return report;

  std::vector<gen::NamedGraph> graphs = gen::structured_suite(n_max);
  std::mt19937_64 rng(options.seed);
  for (int t = 0; t < options.trials; ++t) {
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max));
    double p = 0.2 + 0.5 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    std::uint64_t seed = rng();
    graphs.push_back({"gnp" + std::to_string(t), gen::erdos_renyi(n, p, seed)});
  }

  std::vector<GraphOutcome> outcomes(graphs.size());
  const int workers = std::max(1, options.threads);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < graphs.size(); i += static_cast<std::size_t>(workers)) {
        outcomes[i] = check_graph(graphs[i], options.inject_fault);
      }
    });
  }
  for (auto& t : pool) t.join();

  for (const auto& o : outcomes) {
    report.rows.push_back(o.counts);
    report.failures.insert(report.failures.end(), o.failures.begin(), o.failures.end());
    report.connected_ratio = std::max(report.connected_ratio, o.connected_ratio);
    report.rooted_queries += o.rooted_queries;
    if (o.counts.n > 0) {
      report.separator_base =
          std::max(report.separator_base, std::pow(static_cast<double>(o.counts.separators), 1.0 / o.counts.n));
      report.pmc_base = std::max(report.pmc_base, std::pow(static_cast<double>(o.counts.pmcs), 1.0 / o.counts.n));
    }
  }
  report.pass = report.failures.empty();
  return report;
}

std::string format_selfcheck(const SelfcheckReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "graph" << std::right << std::setw(4) << "n" << std::setw(8) << "|seps|"
      << std::setw(8) << "|pmcs|" << std::setw(5) << "tw" << '\n';
  for (const auto& r : report.rows) {
    out << std::left << std::setw(12) << r.graph << std::right << std::setw(4) << r.n << std::setw(8) << r.separators
        << std::setw(8) << r.pmcs << std::setw(5) << r.treewidth << '\n';
  }
  out << std::fixed << std::setprecision(4);
  out << "bound checks:\n";
  out << "  rooted queries            " << report.rooted_queries << '\n';
  out << "  max count / C(b+f,b)      " << report.connected_ratio << "  (limit 1)\n";
  out << "  max |seps|^(1/n)          " << report.separator_base << "  (asymptotic base 1.6181)\n";
  out << "  max |pmcs|^(1/n)          " << report.pmc_base << "  (asymptotic base 1.7549)\n";
  for (const auto& f : report.failures) out << "MISMATCH " << f << '\n';
  out << (report.pass ? "selfcheck: PASS" : "selfcheck: FAIL") << " (" << report.rows.size() << " graphs)\n";
  return out.str();
}

}  // namespace pmctw
