#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pmctw/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::vector<const char*> argv = {"pmctw"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = pmctw::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

const char* kC5 = "p tw 5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n";
const char* kK4 = "p tw 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pmctw_test_" + name)).string();
}

}  // namespace

TEST(Cli, ExactTreewidth) {
  auto r = run({"treewidth", "--exact", "-"}, kC5);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, AtMostVerdict) {
  auto r = run({"treewidth", "--at-most", "1", "-"}, kC5);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "treewidth > 1\n");
  EXPECT_EQ(run({"treewidth", "--at-most", "2", "-"}, kC5).code, 0);
}

TEST(Cli, FindKAndPolyspace) {
  EXPECT_EQ(run({"treewidth", "--find-k", "-"}, kC5).out, "2\n");
  auto r = run({"treewidth", "--polyspace", "-"}, kC5);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 2), "2\n");
  EXPECT_NE(r.out.find("c leaf_bag_calls"), std::string::npos);
}

TEST(Cli, SeparatorCount) {
  auto r = run({"list-separators", "--count-only", "-"}, kK4);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
  EXPECT_EQ(run({"list-separators", "-"}, kC5).out, "1 3\n1 4\n2 4\n2 5\n3 5\n");
}

TEST(Cli, PmcsAndConnectedSets) {
  EXPECT_EQ(run({"list-pmcs", "--count-only", "-"}, kC5).out, "10\nc size 3 10\n");
  EXPECT_EQ(run({"enum-connected", "--root", "1", "--b", "1", "--f", "2", "-"}, kC5).out, "1 2 | 3 5\n1 5 | 2 4\n");
  EXPECT_EQ(run({"oracle", "treewidth", "-"}, kC5).out, "2\n");
  EXPECT_EQ(run({"oracle", "connected", "--root", "1", "--b", "1", "--f", "2", "-"}, kC5).out,
            "1 2 | 3 5\n1 5 | 2 4\n");
}

TEST(Cli, JsonOutput) {
  auto r = run({"--json", "treewidth", "-"}, kC5);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["treewidth"], 2);
  auto trailing = run({"list-separators", "--count-only", "--json", "-"}, kC5);
  auto k = nlohmann::json::parse(trailing.out);
  EXPECT_EQ(k["count"], 5);
  EXPECT_EQ(k["size_histogram"]["2"], 5);
}

TEST(Cli, EmitAndValidate) {
  const std::string gr = temp_path("c5.gr");
  const std::string td = temp_path("c5.td");
  const std::string tri = temp_path("c5.tri");
  std::ofstream(gr) << kC5;
  auto r = run({"treewidth", gr, "--emit-td", td, "--emit-triangulation", tri});
  EXPECT_EQ(r.code, 0);
  auto v = run({"validate", gr, td});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "valid width 2\n");
  std::ofstream(td) << "s td 1 2 5\nb 1 1 2\n";
  EXPECT_EQ(run({"validate", gr, td}).code, 1);
  std::filesystem::remove(gr);
  std::filesystem::remove(td);
  std::filesystem::remove(tri);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"treewidth", "-"}, "p tw 3 1\n1 1\n").code, 2);
  EXPECT_EQ(run({"treewidth", "/nonexistent/file.gr"}).code, 2);
  EXPECT_EQ(run({"treewidth", "--exact", "--find-k", "-"}, kC5).code, 2);
  EXPECT_EQ(run({"treewidth", "--polyspace", "--emit-td", "x.td", "-"}, kC5).code, 2);
  EXPECT_EQ(run({"treewidth", "--polyspace", "--alpha", "0.7", "-"}, kC5).code, 2);
  EXPECT_EQ(run({"enum-connected", "--root", "9", "--b", "1", "--f", "1", "-"}, kC5).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, GenerateAndSelfcheck) {
  auto g = run({"generate", "--n", "8", "--p", "0.4", "--seed", "5"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out.substr(0, 7), "p tw 8 ");
  EXPECT_EQ(run({"generate", "--n", "8", "--p", "0.4", "--seed", "5"}).out, g.out);
  auto s = run({"selfcheck", "--n-max", "6", "--trials", "5"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("selfcheck: PASS"), std::string::npos);
}
