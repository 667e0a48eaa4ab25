#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli_app.hpp"

using copsrobbers::cli::json;

namespace {

const std::string kData = COPSROBBERS_TEST_DATA;

struct Run {
  int code = 0;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "copsrobbers");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = copsrobbers::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp(const std::string& name) { return ::testing::TempDir() + name; }

}  // namespace

TEST(Cli, GirthFromFile) {
  auto r = run({"girth", kData + "/petersen.el"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.j();
  EXPECT_EQ(j["girth"], 5);
  EXPECT_EQ(j["version"], COPSROBBERS_VERSION);
  EXPECT_EQ(j["config"]["graph"], kData + "/petersen.el");
  EXPECT_FALSE(j.contains("labels"));
  EXPECT_EQ(run({"girth", "heawood"}).j()["girth"], 6);
  EXPECT_TRUE(run({"girth", "tree:7:3"}).j()["girth"].is_null());
}

TEST(Cli, NamedLabelsAreReported) {
  auto j = run({"girth", kData + "/named.el"}).j();
  EXPECT_EQ(j["girth"], 5);
  EXPECT_EQ(j["labels"], json::array({"a", "b", "c", "d", "e"}));
}

TEST(Cli, CopNumber) {
  auto r = run({"cop-number", kData + "/petersen.el", "--kmax", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.j();
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["cop_win"], true);
  EXPECT_GT(j["states_explored"].get<long>(), 0);
  for (auto key : {"graph", "k", "cop_win", "states_explored", "capture_depth"}) EXPECT_TRUE(j.contains(key)) << key;
  auto lost = run({"cop-number", "petersen", "--kmax", "2"});
  EXPECT_EQ(lost.code, 0);
  EXPECT_EQ(lost.j()["cop_win"], false);
  EXPECT_TRUE(lost.j()["k"].is_null());
  EXPECT_EQ(run({"cop-number", "cycle:7", "--kmax", "3"}).j()["k"], 2);
}

TEST(Cli, VerifyLowerBoundWithTrace) {
  auto trace = tmp("vlb_trace.tsv");
  auto r = run({"verify-lower-bound", "highgirth:2000:4:9:1", "--t", "2", "--rounds", "40", "--trace", trace});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.j();
  EXPECT_EQ(j["survived"], true);
  EXPECT_EQ(j["rounds"], 40);
  EXPECT_EQ(j["bound_K"], 1);
  EXPECT_EQ(j["invariant_violations"], 0);
  EXPECT_EQ(j["strategy"], "degree");
  auto text = slurp(trace);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 41);
  EXPECT_EQ(text.rfind("state\tv_s\tu_j\tW\tmax_W_i\tmin_W_i\tsafety\n", 0), 0u);
}

TEST(Cli, VerifyLowerBoundGrowthAndAdversaries) {
  for (auto adv : {"greedy", "random", "optimal"}) {
    auto r = run({"verify-lower-bound", "subdivide:1:tutte12", "--t", "1", "--h", "2", "--adversary", adv, "--rounds",
                  "60"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.j();
    EXPECT_EQ(j["strategy"], "growth");
    EXPECT_EQ(j["params"]["q"], 2);
    EXPECT_EQ(j["survived"], true) << adv;
    EXPECT_EQ(j["invariant_violations"], 0);
  }
}

TEST(Cli, KZeroIsFlagged) {
  auto j = run({"verify-lower-bound", "petersen", "--t", "1", "--rounds", "20"}).j();
  EXPECT_EQ(j["bound_K"], 0);
  EXPECT_TRUE(j.contains("note"));
}

TEST(Cli, Dispersion) {
  auto j = run({"dispersion", "heawood", "--t", "1", "--lemmas"}).j();
  EXPECT_EQ(j["certificate"]["dispersed"], true);
  ASSERT_EQ(j["lemmas"].size(), 3u);
  for (const auto& l : j["lemmas"]) EXPECT_EQ(l["holds"], true) << l["lemma"];
  auto off = run({"dispersion", "heawood", "--t", "1", "--digon-exception", "off"}).j();
  EXPECT_EQ(off["certificate"]["dispersed"], false);
  EXPECT_EQ(off["certificate"]["witness"], "arc_trap");
  EXPECT_EQ(off["certificate"]["witness_valid"], true);
  EXPECT_EQ(off["certificate"]["first"]["P"].size(), 2u);
  auto file = run({"dispersion", kData + "/triangle_digons.el", "--t", "1"}).j();
  EXPECT_EQ(file["arcs"], 5);
  EXPECT_EQ(file["digons"], 1);
  EXPECT_EQ(run({"dispersion", "heawood", "--t", "1", "--digon-exception", "maybe"}).code, 2);
}

TEST(Cli, VerifyLowerBoundDigraph) {
  auto steps = tmp("steps.tsv");
  auto r = run({"verify-lower-bound-digraph", "bidirected:subdivide:1:cubic_girth9", "--t", "1", "--h", "2", "--cops",
                "1", "--rounds", "50", "--steps", steps});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.j();
  EXPECT_EQ(j["strategy"], "growth");
  EXPECT_EQ(j["survived"], true);
  EXPECT_EQ(j["invariant_violations"], 0);
  auto text = slurp(steps);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 101);
  // q = 1 leaves no cops to play against.
  auto od = run({"verify-lower-bound-digraph", "dcycle:6", "--t", "1", "--rounds", "5"}).j();
  EXPECT_EQ(od["vacuous"], true);
  EXPECT_EQ(od["survived"], true);
  EXPECT_EQ(run({"verify-lower-bound-digraph", "dcycle:6", "--t", "1", "--cops", "1", "--rounds", "5"}).code, 3);
}

TEST(Cli, Spectral) {
  auto j = run({"spectral", "cycle:6"}).j();
  EXPECT_NEAR(j["lambda2"].get<double>(), 1.0, 1e-9);
  EXPECT_EQ(j["bipartite"], true);
  EXPECT_NEAR(j["hgamma_limit"].get<double>(), 3.0, 1e-6);
  EXPECT_EQ(j["hgamma_exact"]["value"], "1");
  for (auto key : {"n", "d", "lambda2", "residual", "ramanujan", "hgamma_limit", "hgamma_certified_profile"})
    EXPECT_TRUE(j.contains(key)) << key;
  auto pet = run({"spectral", "petersen"}).j();
  EXPECT_TRUE(pet["hgamma_certified_profile"].is_null());
  EXPECT_EQ(run({"spectral", "tree:9:1"}).code, 3);
}

TEST(Cli, LpsExport) {
  auto path = tmp("lps_13_5.el");
  auto r = run({"lps", "--p", "13", "--q", "5", "--export", path});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.j();
  EXPECT_EQ(j["provenance"]["n"], 120);
  EXPECT_EQ(j["provenance"]["verified"], true);
  auto g = run({"girth", path}).j();
  EXPECT_EQ(g["n"], 120);
  EXPECT_EQ(g["girth"], j["provenance"]["girth"]);
  EXPECT_EQ(run({"lps", "--p", "5", "--q", "11"}).code, 2);
}

TEST(Cli, ExpanderCaptureSmall) {
  auto r = run({"expander-capture", "heawood", "--trials", "6", "--seed", "3", "--eps", "0.5", "--gamma", "0.2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.j();
  for (auto key : {"n", "kappa", "r", "p_prob", "cops", "success_rate", "ci95", "mean_capture_round"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["escapes"], 0);
  EXPECT_EQ(j["plan_violations"], 0);
  EXPECT_EQ(j["hall_unverified"], 0);
  EXPECT_EQ(run({"expander-capture", "petersen", "--delta-slack", "0.3"}).code, 2);
}

TEST(Cli, ExponentReport) {
  auto j = run({"exponent-report", "pg:3"}).j();
  EXPECT_EQ(j["girth"], 6);
  EXPECT_EQ(j["lower"]["t"], 1);
  EXPECT_TRUE(j.contains("meyniel_with_slack"));
  EXPECT_TRUE(j.contains("capture_limit"));
}

TEST(Cli, ErrorCodes) {
  EXPECT_EQ(run({"girth", "no/such/file.el"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify-lower-bound", "cycle:8", "--t", "2"}).code, 3);
  auto res = run({"--state-budget", "10", "cop-number", "petersen", "--kmax", "2"});
  EXPECT_EQ(res.code, 4);
  EXPECT_NE(res.err.find("state budget 10"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TsvSummary) {
  auto r = run({"--format", "tsv", "girth", "petersen"});
  EXPECT_NE(r.out.find("girth\t5\n"), std::string::npos);
  EXPECT_NE(r.out.find("config.graph\tpetersen\n"), std::string::npos);
}

TEST(Cli, Deterministic) {
  std::vector<std::vector<std::string>> cmds{
      {"expander-capture", "heawood", "--trials", "5", "--seed", "9", "--eps", "0.5", "--gamma", "0.2"},
      {"verify-lower-bound", "highgirth:2000:4:9:1", "--t", "2", "--adversary", "random", "--seed", "4", "--rounds", "30"},
      {"spectral", "pg:3"}};
  for (const auto& c : cmds) EXPECT_EQ(run(c).out, run(c).out) << c[0];
  auto a = run({"expander-capture", "heawood", "--trials", "5", "--seed", "9", "--eps", "0.5", "--gamma", "0.2"}).j();
  auto b = run({"expander-capture", "heawood", "--trials", "5", "--seed", "9", "--eps", "0.5", "--gamma", "0.2",
                "--threads", "3"})
               .j();
  a.erase("config");
  b.erase("config");
  EXPECT_EQ(a, b);
}
