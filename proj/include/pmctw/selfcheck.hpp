#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pmctw {

struct SelfcheckOptions {
  int n_max = 8;
  int trials = 20;
  std::uint64_t seed = 1;
  int threads = 1;
  /// Drops one separator from every listed family before comparing; the
  /// run must then report mismatches. Test hook only.
  bool inject_fault = false;
};

struct FamilyCounts {
  std::string graph;
  int n = 0;
  std::size_t separators = 0;
  std::size_t pmcs = 0;
  int treewidth = -1;
};

struct SelfcheckReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<FamilyCounts> rows;
  /// Max over graphs of |Δ_G|^(1/n) and |Π_G|^(1/n).
  double separator_base = 0.0;
  double pmc_base = 0.0;
  /// Max over rooted queries of count / C(b+f, b).
  double connected_ratio = 0.0;
  long long rooted_queries = 0;
};

/// Oracle-equivalence run over structured graphs and seeded G(n, p) graphs
/// with n <= n_max: connected sets, both separator listers, PMCs, exact and
/// bounded treewidth, and (n <= 10) the polynomial-space width.
SelfcheckReport run_selfcheck(const SelfcheckOptions& options);

std::string format_selfcheck(const SelfcheckReport& report);

}  // namespace pmctw
