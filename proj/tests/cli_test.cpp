#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "slant/io/cli.hpp"
#include "slant/io/spec_file.hpp"

namespace slant {
namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("slant_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& file, const std::string& text) {
    std::ofstream(dir_ / file) << text;
    return (dir_ / file).string();
  }
  std::string path(const std::string& file) const { return (dir_ / file).string(); }

  fs::path dir_;
};

TEST(ParseCli, AnalyzeDefaults) {
  const cli::Command c = cli::parse_cli({"analyze", "--surface", "s.json"});
  ASSERT_TRUE(std::holds_alternative<cli::Analyze>(c));
  const auto& o = std::get<cli::Analyze>(c).options;
  EXPECT_EQ(o.surface, "s.json");
  EXPECT_EQ(o.samples, 512u);
  EXPECT_EQ(o.tol, 1e-6);
  EXPECT_FALSE(o.tol_given);
  EXPECT_EQ(o.angle_tol, 1e-3);
  EXPECT_FALSE(o.out.has_value());
  EXPECT_FALSE(o.csv);
}

TEST(ParseCli, VerifyTheorem) {
  const cli::Command c = cli::parse_cli({"verify", "--surface", "s.json", "--theorem", "cor3.1"});
  ASSERT_TRUE(std::holds_alternative<cli::Verify>(c));
  EXPECT_EQ(std::get<cli::Verify>(c).theorem, "cor3.1");
  EXPECT_EQ(std::get<cli::Verify>(cli::parse_cli({"verify", "--surface", "s.json"})).theorem, "all");
}

TEST(ParseCli, ClassifyFlags) {
  const cli::Command c = cli::parse_cli(
      {"classify", "--surface", "x.json", "--samples", "64", "--tol", "1e-4", "--angle-tol", "0.01", "--out", "r.json",
       "--csv"});
  const auto& o = std::get<cli::Classify>(c).options;
  EXPECT_EQ(o.samples, 64u);
  EXPECT_EQ(o.tol, 1e-4);
  EXPECT_TRUE(o.tol_given);
  EXPECT_EQ(o.angle_tol, 0.01);
  EXPECT_EQ(*o.out, "r.json");
  EXPECT_TRUE(o.csv);
}

TEST(ParseCli, ExportRangeAndGrid) {
  const auto e = std::get<cli::Export>(cli::parse_cli({"export", "--surface", "s.json"}));
  EXPECT_EQ(e.v_min, -1.0);
  EXPECT_EQ(e.v_max, 1.0);
  const auto f =
      std::get<cli::Export>(cli::parse_cli({"export", "--surface", "s.json", "--v-range", "-0.5:2", "--grid", "10x3"}));
  EXPECT_EQ(f.v_min, -0.5);
  EXPECT_EQ(f.v_max, 2.0);
  EXPECT_EQ(f.columns, 10u);
  EXPECT_EQ(f.rows, 3u);
}

TEST(ParseCli, UsageErrors) {
  const std::vector<std::vector<std::string>> bad{
      {},
      {"analyze", "--bogus"},
      {"analyze"},
      {"frobnicate"},
      {"verify", "--surface", "s.json", "--theorem", "9.9"},
      {"analyze", "--surface", "s.json", "--samples", "8"},
      {"analyze", "--surface", "s.json", "--samples", "many"},
      {"analyze", "--surface", "s.json", "--csv"},
      {"analyze", "--surface", "s.json", "--tol", "0"},
      {"generate", "--surface", "s.json", "--samples", "4"},
      {"export", "--surface", "s.json", "--v-range", "1:1"},
      {"export", "--surface", "s.json", "--v-range", "1"},
      {"export", "--surface", "s.json", "--v-range", "a:b"},
      {"export", "--surface", "s.json", "--grid", "1x4"},
      {"export", "--surface", "s.json", "--grid", "4"},
  };
  for (const auto& args : bad) {
    EXPECT_THROW(cli::parse_cli(args), cli::UsageError) << (args.empty() ? "" : args.back());
  }
}

TEST(MainEntry, BogusFlagPrintsUsage) {
  const Outcome o = run_cli({"analyze", "--surface", "s.json", "--bogus"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("--bogus"), std::string::npos);
  EXPECT_NE(o.err.find("--surface"), std::string::npos);
  EXPECT_TRUE(o.out.empty());
}

TEST(MainEntry, UnknownTheorem) {
  const Outcome o = run_cli({"verify", "--surface", "s.json", "--theorem", "4.1"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("4.1"), std::string::npos);
}

TEST(MainEntry, Help) {
  const Outcome o = run_cli({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("classify"), std::string::npos);
  const Outcome sub = run_cli({"export", "--help"});
  EXPECT_EQ(sub.code, 0);
  EXPECT_NE(sub.out.find("--v-range"), std::string::npos);
}

TEST_F(Cli, AnalyzeHelicoid) {
  const std::string spec = write("h.json", R"({"kind":"catalog","name":"helicoid"})");
  const Outcome o = run_cli({"analyze", "--surface", spec, "--out", path("r.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto doc = ordered_json::parse(slurp(path("r.json")));
  EXPECT_EQ(doc["meta"]["command"], "analyze");
  EXPECT_EQ(doc["samples"].size(), 512u);
  for (const auto& row : doc["samples"]) EXPECT_LE(std::fabs(row["kappa"].get<double>()), 1e-12);
  EXPECT_TRUE(doc["slant"]["kappa_constancy"]["is_constant"].get<bool>());
  EXPECT_FALSE(fs::exists(path("r.json.tmp")));
}

TEST_F(Cli, ClassifyConstantSigma) {
  const std::string spec = write(
      "s.json",
      R"({"kind":"prescribed_kappa","profile":{"type":"constant_sigma","d":0.5},"s1_range":[-1.8,1.8],"alpha":0.0,"step":0.01})");
  const Outcome o = run_cli({"classify", "--surface", spec});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto doc = ordered_json::parse(o.out);
  EXPECT_TRUE(doc["slant"]["h"]["verdict"].get<bool>());
  EXPECT_FALSE(doc["slant"]["darboux_strict"]["verdict"].get<bool>());
  EXPECT_TRUE(doc["slant"]["darboux_angular"]["verdict"].get<bool>());
  EXPECT_NEAR(doc["slant"]["h"]["cos_angle"].get<double>(), 0.4472135955, 1e-8);
}

TEST_F(Cli, ConstantDirectorIsCylindrical) {
  ordered_json u = ordered_json::array(), f = ordered_json::array(), q = ordered_json::array();
  for (int i = 0; i < 20; ++i) {
    u.push_back(0.1 * i);
    f.push_back({0.1 * i, 0.0, 0.0});
    q.push_back({0.0, 0.0, 1.0});
  }
  const ordered_json doc{{"kind", "sampled"}, {"u", u}, {"f", f}, {"q", q}};
  const std::string spec = write("c.json", doc.dump());
  const Outcome o = run_cli({"analyze", "--surface", spec, "--out", path("r.json")});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("u = "), std::string::npos) << o.err;
  EXPECT_FALSE(fs::exists(path("r.json")));
}

TEST_F(Cli, IoFailures) {
  EXPECT_EQ(run_cli({"analyze", "--surface", path("missing.json")}).code, 3);
  const std::string spec = write("h.json", R"({"kind":"catalog","name":"helicoid"})");
  EXPECT_EQ(run_cli({"analyze", "--surface", spec, "--out", path("nodir/r.json")}).code, 3);
  EXPECT_EQ(run_cli({"export", "--surface", spec, "--out", path("nodir/m.obj")}).code, 3);
}

TEST_F(Cli, SchemaViolations) {
  EXPECT_EQ(run_cli({"analyze", "--surface", write("a.json", "{oops")}).code, 1);
  EXPECT_EQ(run_cli({"analyze", "--surface", write("b.json", R"({"kind":"catalog","name":"torus"})")}).code, 1);
  EXPECT_EQ(run_cli({"analyze", "--surface", write("c.json", R"({"kind":"prescribed_kappa"})")}).code, 1);
  EXPECT_EQ(run_cli({"generate", "--surface", write("d.json", R"({"kind":"sampled","u":[]})")}).code, 1);
}

TEST_F(Cli, CsvNextToReport) {
  const std::string spec = write("h.json", R"({"kind":"catalog","name":"hyperboloid"})");
  const Outcome o = run_cli({"analyze", "--surface", spec, "--samples", "16", "--out", path("r.json"), "--csv"});
  ASSERT_EQ(o.code, 0) << o.err;
  const std::string csv = slurp(path("r.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "u,s1,kappa,kappa_prime,sigma,qx,qy,qz,hx,hy,hz,ax,ay,az,Wx,Wy,Wz,cx,cy,cz");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 17);
}

TEST_F(Cli, VerifyWritesAudits) {
  const std::string spec = write("l.json", R"({"kind":"catalog","name":"latitude_cone","params":{"beta":0.5}})");
  const Outcome o = run_cli({"verify", "--surface", spec, "--theorem", "3.1"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto doc = ordered_json::parse(o.out);
  ASSERT_EQ(doc["audits"].size(), 1u);
  EXPECT_EQ(doc["audits"]["3.1"]["status"], "passed");
}

TEST_F(Cli, GenerateThenAnalyzeRoundTrip) {
  const std::string spec = write("g.json", R"({"kind":"catalog","name":"constant_sigma","params":{"d":0.5}})");
  ASSERT_EQ(run_cli({"generate", "--surface", spec, "--samples", "400", "--out", path("sampled.json")}).code, 0);
  const auto sampled = ordered_json::parse(slurp(path("sampled.json")));
  EXPECT_EQ(sampled["kind"], "sampled");
  EXPECT_EQ(sampled["u"].size(), 400u);
  EXPECT_EQ(sampled["source"]["name"], "constant_sigma");

  const Outcome o = run_cli({"classify", "--surface", path("sampled.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto doc = ordered_json::parse(o.out);
  EXPECT_TRUE(doc["meta"]["sampled"].get<bool>());
  EXPECT_EQ(doc["meta"]["tolerances"]["tol"], 1e-3);
  for (const auto& [kind, verdict] : sampled["expected"]["verdicts"].items()) {
    EXPECT_EQ(doc["slant"][kind]["verdict"], verdict) << kind;
  }
  EXPECT_NEAR(doc["slant"]["sigma_constancy"]["mean"].get<double>(), 0.5, 1e-3);

  const Outcome strict = run_cli({"classify", "--surface", path("sampled.json"), "--tol", "1e-4"});
  EXPECT_EQ(ordered_json::parse(strict.out)["meta"]["tolerances"]["tol"], 1e-4);
}

TEST_F(Cli, ExportObj) {
  const std::string spec = write("h.json", R"({"kind":"catalog","name":"helicoid"})");
  const Outcome o = run_cli({"export", "--surface", spec, "--grid", "2x2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(std::count(o.out.begin(), o.out.end(), '\n'), 1 + 4 + 2);
  EXPECT_NE(o.out.find("\nv 1 0 0\n"), std::string::npos);
}

TEST_F(Cli, OutputsAreByteIdentical) {
  const std::string spec = write("s.json", R"({"kind":"catalog","name":"tabulated_kappa"})");
  const std::vector<std::pair<std::string, std::vector<std::string>>> commands{
      {"verify", {"verify", "--surface", spec, "--samples", "128", "--csv"}},
      {"generate", {"generate", "--surface", spec, "--samples", "64"}},
      {"export", {"export", "--surface", spec, "--grid", "8x4"}},
  };
  for (const auto& [tag, args] : commands) {
    std::string first[2], second[2];
    for (int run = 0; run < 2; ++run) {
      auto a = args;
      a.push_back("--out");
      a.push_back(path(tag + std::to_string(run) + ".out"));
      ASSERT_EQ(run_cli(a).code, 0) << tag;
      first[run] = slurp(path(tag + std::to_string(run) + ".out"));
      if (tag == "verify") second[run] = slurp(path(tag + std::to_string(run) + ".csv"));
    }
    EXPECT_FALSE(first[0].empty());
    EXPECT_EQ(first[0], first[1]) << tag;
    EXPECT_EQ(second[0], second[1]) << tag;
  }
}

}  // namespace
}  // namespace slant
