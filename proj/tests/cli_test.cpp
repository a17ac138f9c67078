#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kpvc/cli.hpp"
#include "kpvc/io.hpp"

namespace kpvc {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kpvc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string &name, const std::string &text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string &name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string &p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

const char *kPath = "p kpvc 3 2 2\nv 1 1\nv 2 2\nv 3 1\nb 1 0\nb 2 1\ne 1 2\ne 2 3\n";
const char *kPathNoBudget = "p kpvc 3 2 2\nv 1 1\nv 2 2\nv 3 1\nb 1 0\nb 2 0\ne 1 2\ne 2 3\n";
const char *kTrianglePlusIsolated =
    "p kpvc 4 3 4\nv 1 1\nv 2 2\nv 3 3\nv 4 4\nb 1 1\nb 2 1\nb 3 1\nb 4 1\n"
    "e 1 2\ne 1 3\ne 2 3\n";

TEST_F(CliTest, ValidateExitCodes) {
  auto r = run({"validate", file("ok.kpvc", kPath)});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "ok\n");

  r = run({"validate", file("intra.kpvc", "p kpvc 2 1 1\nv 1 1\nv 2 1\nb 1 1\ne 1 2\n")});
  EXPECT_EQ(r.code, cli::kInvalidInstance);
  EXPECT_NE(r.err.find("IntraPartEdge at line 5"), std::string::npos) << r.err;

  r = run({"validate", path("missing.kpvc")});
  EXPECT_EQ(r.code, cli::kIoError);

  r = run({"validate", file("bad.kpvc", "p kpvc 2 1 2\nv 1 1\nv 2 2\nb 1 1\nb 2 1\ne 1 1\n")});
  EXPECT_EQ(r.code, cli::kParseError);
  EXPECT_NE(r.err.find("line 6"), std::string::npos);
}

TEST_F(CliTest, SolvePathGraph) {
  const std::string f = file("path.kpvc", kPath);
  for (const std::string algo : {"exact", "cvck"}) {
    const auto r = run({"solve", f, "--algo", algo, "--output", "json"});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["cover"], nlohmann::json::array({2}));
    EXPECT_EQ(j["size"], 1);
  }
  const auto approx = run({"solve", f, "--algo", "2approx"});
  EXPECT_EQ(approx.code, cli::kOk);
}

TEST_F(CliTest, SolveFailureCodes) {
  const std::string f = file("zero.kpvc", kPathNoBudget);
  EXPECT_EQ(run({"solve", f, "--algo", "cvck"}).code, cli::kHeuristicFailure);
  const auto r = run({"solve", f, "--algo", "exact"});
  EXPECT_EQ(r.code, cli::kInfeasible);
  EXPECT_NE(r.out.find("\"size\":null"), std::string::npos);
}

TEST_F(CliTest, SolveFormats) {
  const std::string f = file("path.kpvc", kPath);
  auto r = run({"solve", f, "--output", "csv"});
  EXPECT_EQ(r.out.rfind(std::string(result_csv_header()), 0), 0u);
  EXPECT_EQ(r.out.rfind("cvck,Success,2,1,0;1,", result_csv_header().size()),
            result_csv_header().size());
  r = run({"solve", f, "--output", "text"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_FALSE(r.out.empty());
  EXPECT_EQ(run({"solve", f, "--algo", "magic"}).code, cli::kParseError);
}

TEST_F(CliTest, ReduceClique) {
  const std::string in = file("tri.kpvc", kTrianglePlusIsolated);
  auto r = run({"reduce-clique", in, "--k", "3", "--out", path("star.kpvc")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const std::string text = slurp(path("star.kpvc"));
  EXPECT_EQ(text.rfind("c target_cover_size 1\n", 0), 0u);
  const Instance star = parse_instance(text);
  EXPECT_EQ(star.graph.edges(), (std::vector<Edge>{{1, 4}, {2, 4}, {3, 4}}));
  EXPECT_TRUE(validate_instance(star).ok());
  EXPECT_EQ(run({"solve", path("star.kpvc"), "--algo", "exact"}).out.find("\"cover\":[4]") !=
                std::string::npos,
            true);

  const std::string k3 =
      file("k3.kpvc", "p kpvc 3 3 3\nv 1 1\nv 2 2\nv 3 3\nb 1 1\nb 2 1\nb 3 1\n"
                      "e 1 2\ne 1 3\ne 2 3\n");
  ASSERT_EQ(run({"reduce-clique", k3, "--k", "3", "--out", path("empty.kpvc")}).code, cli::kOk);
  const std::string empty = slurp(path("empty.kpvc"));
  EXPECT_EQ(empty.rfind("c target_cover_size 0\n", 0), 0u);
  EXPECT_EQ(parse_instance(empty).graph.edge_count(), 0u);

  const std::string e2 = file("e2.kpvc", "p kpvc 2 0 1\nv 1 1\nv 2 1\nb 1 2\n");
  ASSERT_EQ(run({"reduce-clique", e2, "--k", "1", "--out", path("k2.kpvc")}).code, cli::kOk);
  const std::string k2 = slurp(path("k2.kpvc"));
  EXPECT_EQ(k2.rfind("c target_cover_size 1\n", 0), 0u);
  EXPECT_EQ(parse_instance(k2).graph.edges(), (std::vector<Edge>{{1, 2}}));

  EXPECT_EQ(run({"reduce-clique", in, "--k", "5", "--out", path("x.kpvc")}).code,
            cli::kParseError);
}

TEST_F(CliTest, GenExamples) {
  const auto k2 = run({"gen", "--n", "2", "--k", "2", "--density", "1", "--seed", "1"});
  ASSERT_EQ(k2.code, cli::kOk) << k2.err;
  EXPECT_EQ(parse_instance(k2.out).graph.edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(run({"gen", "--n", "2", "--k", "2", "--density", "1", "--seed", "1"}).out, k2.out);

  const auto tree = run({"gen", "--tree", "--n", "10", "--seed", "7"});
  ASSERT_EQ(tree.code, cli::kOk);
  std::istringstream lines(tree.out);
  std::string line;
  int edges = 0;
  while (std::getline(lines, line)) edges += line.rfind("e ", 0) == 0;
  EXPECT_EQ(edges, 9);

  const auto complete = run({"gen", "--complete", "2,3"});
  ASSERT_EQ(complete.code, cli::kOk) << complete.err;
  EXPECT_EQ(parse_instance(complete.out).graph.edge_count(), 6u);

  EXPECT_EQ(run({"gen", "--n", "3", "--k", "5"}).code, cli::kParseError);
  EXPECT_EQ(run({"gen", "--n", "40", "--budget-mode", "exact"}).code, cli::kParseError);
  EXPECT_EQ(run({"gen", "--n", "4", "--budget-mode", "bogus"}).code, cli::kParseError);
  EXPECT_EQ(run({"gen"}).code, cli::kParseError);
}

TEST_F(CliTest, BenchWritesCsv) {
  const auto r = run({"bench", "--sizes", "10", "--trials", "5", "--seed", "1", "--out",
                      path("bench.csv")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("success rate"), std::string::npos);
  std::istringstream csv(slurp(path("bench.csv")));
  std::string line;
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 16);

  EXPECT_EQ(run({"bench", "--sizes", "10", "--out", path("no/such/dir/x.csv")}).code,
            cli::kIoError);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kParseError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kParseError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

} // namespace
} // namespace kpvc
