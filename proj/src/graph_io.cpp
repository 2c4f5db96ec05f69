#include "pmctw/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace pmctw {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    f(lineno, text.substr(start, end - start));
    start = end + 1;
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<long long> declared_n;
  std::vector<std::pair<long long, long long>> raw;
  std::vector<int> raw_lines;
  bool seen_edge = false;

  for_each_line(text, [&](int lineno, std::string_view line) {
    auto tok = split_tokens(line);
    if (tok.empty() || tok[0] == "c" || tok[0][0] == '#') return;
    if (tok[0] == "p") {
      if (declared_n || seen_edge) throw ParseError(lineno, "unexpected header line");
      if (tok.size() != 4) throw ParseError(lineno, "header must be 'p tw <n> <m>'");
      long long n = to_int(tok[2], lineno, "vertex count");
      long long m = to_int(tok[3], lineno, "edge count");
      if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
      if (n > kMaxVertices) {
        throw ParseError(lineno, "vertex count exceeds " + std::to_string(kMaxVertices));
      }
      declared_n = n;
      return;
    }
    if (tok.size() != 2) throw ParseError(lineno, "edge line must have two vertex ids");
    long long u = to_int(tok[0], lineno, "vertex id");
    long long v = to_int(tok[1], lineno, "vertex id");
    if (u < 1 || v < 1) throw ParseError(lineno, "vertex ids are 1-indexed");
    if (declared_n && (u > *declared_n || v > *declared_n)) {
      throw ParseError(lineno, "vertex id exceeds declared count " + std::to_string(*declared_n));
    }
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    seen_edge = true;
    raw.emplace_back(u - 1, v - 1);
    raw_lines.push_back(lineno);
  });

  long long n = 0;
  if (declared_n) {
    n = *declared_n;
  } else {
    for (auto [u, v] : raw) n = std::max({n, u + 1, v + 1});
    if (n > kMaxVertices) {
      throw ParseError(raw_lines.back(), "vertex count exceeds " + std::to_string(kMaxVertices));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p tw " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string write_decomposition(const TreeDecomposition& td, int n) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

TreeDecomposition parse_decomposition(std::string_view text, int* n_out) {
  TreeDecomposition td;
  std::optional<long long> bag_count;
  for_each_line(text, [&](int lineno, std::string_view line) {
    auto tok = split_tokens(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "s") {
      if (tok.size() != 5 || tok[1] != "td") throw ParseError(lineno, "solution line must be 's td <bags> <width+1> <n>'");
      bag_count = to_int(tok[2], lineno, "bag count");
      if (*bag_count < 0) throw ParseError(lineno, "negative bag count");
      td.bags.assign(static_cast<std::size_t>(*bag_count), VertexSet{});
      if (n_out) *n_out = static_cast<int>(to_int(tok[4], lineno, "vertex count"));
      return;
    }
    if (!bag_count) throw ParseError(lineno, "missing solution line");
    if (tok[0] == "b") {
      if (tok.size() < 2) throw ParseError(lineno, "bag line needs an index");
      long long idx = to_int(tok[1], lineno, "bag index");
      if (idx < 1 || idx > *bag_count) throw ParseError(lineno, "bag index out of range");
      for (std::size_t i = 2; i < tok.size(); ++i) {
        long long v = to_int(tok[i], lineno, "vertex id");
        if (v < 1 || v > kMaxVertices) throw ParseError(lineno, "vertex id out of range");
        td.bags[static_cast<std::size_t>(idx - 1)].insert(static_cast<int>(v - 1));
      }
      return;
    }
    if (tok.size() != 2) throw ParseError(lineno, "tree edge line must have two bag ids");
    long long a = to_int(tok[0], lineno, "bag id");
    long long b = to_int(tok[1], lineno, "bag id");
    if (a < 1 || b < 1 || a > *bag_count || b > *bag_count) throw ParseError(lineno, "tree edge references a missing bag");
    td.edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  });
  if (!bag_count) throw ParseError(1, "missing solution line");
  return td;
}

std::string write_edge_list(std::span<const Edge> edges) {
  std::ostringstream out;
  for (auto [u, v] : edges) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace pmctw
