#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "brute.hpp"
#include "json.hpp"
#include "repnum/cli.hpp"
#include "repnum/graph.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = repnum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("repnum_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string strip_runtime(json j) {
  j.erase("runtime_seconds");
  return j.dump();
}

}  // namespace

TEST_F(CliTest, ZerosumFind) {
  auto f = file("seq.txt", "1 1 1 9\n1\n-1\n1\n-1\n1\n-1\n1\n-1\n1\n");
  auto r = run({"zerosum", "find", f});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.report();
  EXPECT_EQ(j["command"], "zerosum find");
  auto w = j["outputs"]["witness"].get<std::vector<int>>();
  ASSERT_FALSE(w.empty());
  int sum = 0;
  for (int i : w) {
    EXPECT_GE(i, 1);
    EXPECT_LE(i, 9);
    sum += i % 2 ? 1 : -1;
  }
  EXPECT_EQ(sum, 0);
}

TEST_F(CliTest, ZerosumReorderRejectsNonZeroSum) {
  auto f = file("seq.txt", "1 1 0 3\n1\n1\n-1\n");
  auto r = run({"zerosum", "reorder", f});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("do not sum to zero"), std::string::npos);
}

TEST_F(CliTest, ZerosumTrim) {
  std::string text = "1 1 1 41\n";
  for (int i = 0; i < 20; ++i) text += "1\n-1\n";
  text += "1\n";
  auto r = run({"zerosum", "trim", file("seq.txt", text)});
  ASSERT_EQ(r.code, 0) << r.err;
  auto out = r.report()["outputs"];
  EXPECT_LE(out["kept_count"].get<int>(), 9);
  EXPECT_EQ(out["size_bound"], 9);
  EXPECT_EQ(out["sum"], std::vector<int>{1});
  EXPECT_EQ(out["valid"], true);
}

TEST_F(CliTest, IoAndParseErrorsExitOne) {
  EXPECT_EQ(run({"zerosum", "find", path("missing.txt")}).code, 1);
  EXPECT_EQ(run({"zerosum", "find", file("bad.txt", "1 1 1 2\n5\n0\n")}).code, 1);
  EXPECT_EQ(run({"equalize", file("bad.g6", "A!\n")}).code, 1);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"oracle", "sweep", "--n", "8"}).code, 2);
  EXPECT_EQ(run({"oracle", "sweep"}).code, 2);
  EXPECT_EQ(run({"generate", "dn", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"generate", "blowup", "--base", "antiregular:10", "--q", "2"}).code, 2);
  EXPECT_EQ(run({"oracle", "min-del"}).code, 2);
  auto g = file("g.g6", "Bw\n");
  EXPECT_EQ(run({"equalize", g, "--three", "--r", "2"}).code, 2);
}

TEST_F(CliTest, EqualizeThree) {
  std::mt19937_64 rng(5);
  auto g = brute::random_graph(30, 0.3, rng);
  auto r = run({"equalize", file("g.g6", repnum::write_graph6(g) + "\n"), "--k", "3", "--three"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto cert = r.report()["outputs"]["certificate"];
  EXPECT_LE(cert["deleted"].size(), 6u);
  EXPECT_EQ(cert["verified"], true);
}

TEST_F(CliTest, EqualizeWeightedJson) {
  std::mt19937_64 rng(6);
  auto g = brute::random_weighted(20, 1, rng);
  auto r = run({"equalize", file("g.json", repnum::to_json(g).dump()), "--k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto out = r.report()["outputs"];
  EXPECT_EQ(out["threshold"]["C"], 203);
  EXPECT_LE(out["certificate"]["deleted"].size(), 203u);
  EXPECT_EQ(out["certificate"]["verified"], true);
}

TEST_F(CliTest, EqualizeKTwo) {
  auto r = run({"equalize", file("p.g6", "Bg\n"), "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.report()["outputs"]["certificate"]["deleted"].empty());
}

TEST_F(CliTest, OracleMinDel) {
  auto r = run({"oracle", "min-del", "--graph", "A_", "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["outputs"]["min_deletions"], 0);
}

TEST_F(CliTest, OracleSweepAndScan) {
  auto r = run({"oracle", "sweep", "--n", "5", "--k", "3", "--budget", "2", "--jobs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(r.report()["outputs"]["max_min_deletions"].get<int>(), 2);

  auto s = run({"oracle", "scan", file("c.g6", "G~~~~{\nA_\n")});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.report()["outputs"]["graphs_examined"], 2);
  EXPECT_EQ(s.report()["outputs"]["max_min_deletions"], 0);
}

TEST_F(CliTest, Generate) {
  auto dn = run({"generate", "dn", "--n", "100"});
  ASSERT_EQ(dn.code, 0) << dn.err;
  auto plan = dn.report()["outputs"]["plan"];
  EXPECT_EQ(plan["clique_sizes"], (std::vector<int>{44, 22, 15, 11}));
  EXPECT_EQ(plan["isolated"], 8);

  auto ar = run({"generate", "antiregular", "--n", "4"});
  ASSERT_EQ(ar.code, 0);
  EXPECT_EQ(ar.report()["outputs"]["rep"], 2);
  EXPECT_EQ(repnum::parse_graph6(ar.report()["outputs"]["graph"].get<std::string>()).order(), 4);

  auto out = path("b.json");
  auto bl = run({"generate", "blowup", "--base", "antiregular:10", "--q", "5", "--format", "json", "--out", out});
  ASSERT_EQ(bl.code, 0) << bl.err;
  EXPECT_EQ(bl.report()["outputs"]["n"], 50);
  std::ifstream gin(out), pin(out + ".plan.json");
  auto g = repnum::simple_from_adjacency_json(json::parse(gin));
  EXPECT_EQ(g.order(), 50);
  EXPECT_EQ(json::parse(pin)["q"], 5);
}

TEST_F(CliTest, ReportsAreDeterministic) {
  std::vector<std::vector<std::string>> cmds = {
      {"generate", "dn", "--n", "60", "--samples", "50", "--seed", "4"},
      {"oracle", "sweep", "--n", "4"},
      {"oracle", "min-del", "--graph", "Dhc"},
  };
  for (const auto& c : cmds) {
    auto a = run(c), b = run(c);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(strip_runtime(a.report()), strip_runtime(b.report()));
    EXPECT_TRUE(a.report().contains("seed"));
  }
}

TEST_F(CliTest, VerifyClaims) {
  auto r = run({"verify-claims"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("203"), std::string::npos);
  auto claims = r.report()["outputs"]["claims"];
  bool skipped = false;
  for (const auto& c : claims) {
    if (c["status"] == "skipped") skipped = true;
    else EXPECT_EQ(c["status"], "pass") << c["claim"];
  }
  EXPECT_TRUE(skipped);

  // a corpus with no graph needing three deletions fails the claim
  auto fail = run({"verify-claims", "--corpus", file("c.g6", "G~~~~{\n")});
  EXPECT_EQ(fail.code, 3);
  EXPECT_EQ(fail.report()["outputs"]["all_passed"], false);
}
