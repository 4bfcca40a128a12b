#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ehc/cli.hpp"
#include "ehc/instances.hpp"
#include "ehc/io.hpp"

using namespace ehc;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Last non-empty line of the output.
std::string last_line(const std::string& s) {
  const auto end = s.find_last_not_of('\n');
  const auto nl = s.rfind('\n', end);
  const auto start = nl == std::string::npos ? 0 : nl + 1;
  return s.substr(start, end - start + 1);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = std::filesystem::temp_directory_path() / ("ehc_cli_" + std::string(info->name()));
    std::filesystem::create_directories(dir_);
    line_ = path("line.csv");
    io::write_file(line_, io::points_to_csv(random_1d(12, 0.0, 6.0, RandomSeed{1})));
    cloud_ = path("cloud.csv");
    io::write_file(cloud_, io::points_to_csv(random_gaussian_cloud(15, 3, RandomSeed{2})));
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
  std::string line_, cloud_;
};

}  // namespace

TEST(ParseSizes, Suffixes) {
  EXPECT_EQ(cli::parse_sizes("10k, 100K,1m,7"),
            (std::vector<std::size_t>{10'000, 100'000, 1'000'000, 7}));
  EXPECT_THROW(cli::parse_sizes("10x"), std::invalid_argument);
  EXPECT_THROW(cli::parse_sizes("0"), std::invalid_argument);
  EXPECT_THROW(cli::parse_sizes("1,,2"), std::invalid_argument);
}

TEST(BenchCsv, HeaderAndRows) {
  const std::vector<cli::BenchRow> rows{{10, 0.5, 1.0}};
  EXPECT_EQ(cli::bench_to_csv(rows), "size,pass_seconds,prc_seconds\n10,0.5,1\n");
}

TEST_F(CliTest, ClusterEveryAlgorithm) {
  for (const char* algo : {"prc", "rc", "al", "sl", "greedy", "opt"}) {
    const auto data = std::string(algo) == "opt" ? path("small.csv") : line_;
    if (std::string(algo) == "opt") {
      io::write_file(data, io::points_to_csv(random_1d(6, 0.0, 3.0, RandomSeed{3})));
    }
    const auto r = run({"cluster", data, "--algo", algo, "--seed", "4"});
    ASSERT_EQ(r.code, cli::kExitOk) << algo << ": " << r.err;
    const auto tree = io::parse_tree(r.out);
    EXPECT_EQ(tree.leaf_count(), std::string(algo) == "opt" ? 6u : 12u);
  }
}

TEST_F(CliTest, ClusterIsDeterministic) {
  const auto a = run({"cluster", cloud_, "--algo", "prc", "--seed", "9"});
  const auto b = run({"cluster", cloud_, "--algo", "prc", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, EvaluateReportMatchesLibrary) {
  const auto r = run({"cluster", line_, "--algo", "al", "--sigma", "1.5", "--evaluate",
                      "--format", "newick", "-o", path("t.nwk")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = json::parse(last_line(r.out));
  EXPECT_EQ(report["n"], 12);
  EXPECT_TRUE(report["bounds"].contains("MAX-upper"));
  EXPECT_TRUE(report["bounds"].contains("1D-SUM-upper"));

  const auto e = run({"evaluate", line_, "--tree", path("t.nwk"), "--sigma", "1.5"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(json::parse(last_line(e.out))["f_plus"], report["f_plus"]);
}

TEST_F(CliTest, MonteCarloRepeatsAddMeanRatios) {
  const auto r = run({"cluster", cloud_, "--algo", "prc", "--repeats", "20", "--evaluate",
                      "--bounds", "max"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = json::parse(last_line(r.out));
  EXPECT_EQ(report["monte_carlo"]["repeats"], 20);
  EXPECT_TRUE(report["mean_ratios"].contains("MAX-upper"));
  EXPECT_FALSE(report["bounds"].contains("1D-SUM-upper"));
}

TEST_F(CliTest, OneDimensionalBoundsSkippedForCloud) {
  const auto r = run({"cluster", cloud_, "--algo", "sl", "--evaluate"});
  ASSERT_EQ(r.code, 0);
  const auto report = json::parse(last_line(r.out));
  ASSERT_EQ(report["skipped"].size(), 1u);
  EXPECT_NE(report["skipped"][0].get<std::string>().find("3-dimensional"), std::string::npos);
}

TEST_F(CliTest, TraceFileHasOneLinePerMerge) {
  ASSERT_EQ(run({"cluster", line_, "--algo", "al", "--trace", path("t.jsonl")}).code, 0);
  std::istringstream in(io::read_file(path("t.jsonl")));
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(json::parse(line)["type"], "merge");
    ++count;
  }
  EXPECT_EQ(count, 11);
}

TEST_F(CliTest, MatrixInput) {
  io::write_file(path("w.csv"), "1,0.9,0.1\n0.9,1,0.2\n0.1,0.2,1\n");
  const auto r = run({"cluster", path("w.csv"), "--matrix", "--algo", "al", "--evaluate"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::tree_to_newick(io::parse_tree(r.out.substr(0, r.out.find('\n')))), "((0,1),2);");
  EXPECT_EQ(run({"cluster", path("w.csv"), "--matrix", "--algo", "prc"}).code, cli::kExitInvalid);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"cluster", path("missing.csv")}).code, cli::kExitIo);
  EXPECT_EQ(run({"cluster", line_, "--algo", "bogus"}).code, cli::kExitInvalid);
  EXPECT_EQ(run({"cluster", cloud_, "--algo", "rc"}).code, cli::kExitInvalid);
  EXPECT_EQ(run({"cluster", line_, "--algo", "opt"}).code, cli::kExitInvalid);  // n > 10
  EXPECT_EQ(run({"cluster", line_, "--sigma", "-1"}).code, cli::kExitInvalid);
  EXPECT_EQ(run({"cluster", line_, "--materialize-limit", "5", "--algo", "al"}).code,
            cli::kExitInvalid);
  EXPECT_EQ(run({"cluster", line_, "-o", "/nonexistent/dir/t.json"}).code, cli::kExitIo);
  EXPECT_EQ(run({}).code, cli::kExitInvalid);
  io::write_file(path("bad.csv"), "1,2\n3,x\n");
  const auto bad = run({"cluster", path("bad.csv")});
  EXPECT_EQ(bad.code, cli::kExitInvalid);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, CubicGateSkipsOrForces) {
  const auto skipped = run({"cluster", line_, "--algo", "al", "--evaluate", "--cubic-limit", "5"});
  ASSERT_EQ(skipped.code, 0);
  EXPECT_FALSE(json::parse(last_line(skipped.out))["bounds"].contains("MAX-upper"));
  const auto forced = run({"cluster", line_, "--algo", "al", "--evaluate", "--cubic-limit", "5",
                           "--force-cubic"});
  EXPECT_TRUE(json::parse(last_line(forced.out))["bounds"].contains("MAX-upper"));
}

TEST_F(CliTest, EvaluateRejectsLeafMismatch) {
  io::write_file(path("t.nwk"), "((0,1),2);\n");
  EXPECT_EQ(run({"evaluate", line_, "--tree", path("t.nwk")}).code, cli::kExitInvalid);
  EXPECT_EQ(run({"evaluate", line_}).code, cli::kExitInvalid);
}

TEST_F(CliTest, PerturbKeepsScoringOnOriginalData) {
  const auto r = run({"cluster", line_, "--algo", "al", "--perturb", "1e-9", "--evaluate",
                      "--bounds", "none"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(last_line(r.out))["n"], 12);
}

TEST_F(CliTest, GenWritesCsvAndDescriptor) {
  const auto r = run({"gen", "four_point", "--delta", "2", "-o", path("fp.csv"), "--descriptor",
                      path("fp.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto pts = io::read_points_csv(path("fp.csv")).points;
  EXPECT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts.coord(3, 0), 6.0);
  const auto again = run({"gen", "--spec", path("fp.json")});
  EXPECT_EQ(again.out, io::read_file(path("fp.csv")));
  EXPECT_EQ(run({"gen"}).code, cli::kExitInvalid);
  EXPECT_EQ(run({"gen", "clique_embed", "--n", "10"}).code, cli::kExitInvalid);
}

TEST_F(CliTest, GenFamiliesProduceExpectedShapes) {
  const auto cloud = run({"gen", "gaussian_cloud", "--n", "7", "--dim", "3", "--seed", "1"});
  const auto parsed = io::parse_points_csv(cloud.out).points;
  EXPECT_EQ(parsed.size(), 7u);
  EXPECT_EQ(parsed.dim(), 3u);
  const auto graph = run({"gen", "graph_encode", "--nodes", "5", "--p", "0.5"});
  EXPECT_EQ(io::parse_points_csv(graph.out).points.dim(), 15u);
}

TEST_F(CliTest, BenchFromInputFile) {
  const auto r = run({"bench", "--sizes", "5,10", "--input", cloud_, "--repeats", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("size,pass_seconds,prc_seconds\n5,", 0), 0u);
  EXPECT_EQ(run({"bench", "--sizes", "100", "--input", cloud_}).code, cli::kExitInvalid);
  ASSERT_EQ(run({"bench", "--sizes", "1k", "--dim", "4", "--report", path("b.csv")}).code, 0);
  EXPECT_EQ(io::read_file(path("b.csv")).rfind("size,", 0), 0u);
}

TEST_F(CliTest, HeaderRowIsSkipped) {
  io::write_file(path("h.csv"), "x,y\n0,0\n1,0\n0,1\n");
  io::write_file(path("n.csv"), "0,0\n1,0\n0,1\n");
  const auto a = run({"cluster", path("h.csv"), "--header", "--algo", "al"});
  const auto b = run({"cluster", path("n.csv"), "--algo", "al"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, TwoLeafTreeScoresZero) {
  io::write_file(path("two.csv"), "0\n1\n");
  io::write_file(path("two.nwk"), "(0,1);\n");
  const auto r = run({"evaluate", path("two.csv"), "--tree", path("two.nwk")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(last_line(r.out))["f_plus"], 0.0);
}

TEST_F(CliTest, BenchSizeOne) {
  const auto r = run({"bench", "--sizes", "1", "--repeats", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("size,pass_seconds,prc_seconds\n1,", 0), 0u);
}

TEST_F(CliTest, ZooMonteCarloRatio) {
  const auto zoo = std::string(EHC_TEST_DATA_DIR) + "/zoo.csv";
  const auto r = run({"cluster", zoo, "--header", "--label-col", "0", "--algo", "prc", "--sigma",
                      "5", "--seed", "7", "--repeats", "10000", "--evaluate", "--bounds", "max"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = json::parse(last_line(r.out));
  EXPECT_EQ(report["n"], 101);
  EXPECT_GE(report["mean_ratios"]["MAX-upper"].get<double>(), 0.90);
}
