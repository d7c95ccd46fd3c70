#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "report.hpp"
#include "talbot/errors.hpp"

namespace talbot::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("talbot_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    unsetenv("TALBOT_SEED");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("TALBOT_SEED");
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  json load(const std::string& name) const { return json::parse(slurp(dir_ / name)); }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"decompose"}).code, kExitUsage);
  EXPECT_EQ(call({"decompose", "--n", "20"}).code, kExitUsage);
  EXPECT_EQ(call({"decompose", "--n", "x"}).code, kExitUsage);
  EXPECT_EQ(call({"chambers", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(call({"chambers", "--n", "8", "--exhaustive", "--samples", "1"}).code, kExitUsage);
  EXPECT_EQ(call({"classify"}).code, kExitUsage);
  EXPECT_EQ(call({"--tol", "-1", "classify", "--coords", "1,0 -1,0 0,0"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitPass);
}

TEST_F(CliTest, ClassifyExample) {
  const auto r = call({"--json", path("c.json"), "--csv", path("c.csv"), "classify", "--coords",
                       "5,0 0,3 -2,0 -1,0 -2,-3"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("chamber label: [1,5,2,3,4]"), std::string::npos);
  const auto j = load("c.json");
  EXPECT_EQ(j["command"], "classify");
  EXPECT_EQ(j["status"], "report-only");
  EXPECT_EQ(j["results"]["label"], json({1, 5, 2, 3, 4}));
  EXPECT_EQ(j["results"]["interior"], true);
  EXPECT_TRUE(j["parameters"].contains("seed"));
  EXPECT_TRUE(j["parameters"].contains("tol"));
  EXPECT_EQ(j["results"]["point"][1], json({{"re", 0.0}, {"im", 3.0}}));

  const auto csv = slurp(dir_ / "c.csv");
  EXPECT_EQ(csv.substr(0, csv.find("\r\n")), "index,re,im,modulus_squared,rank_in_label");
  EXPECT_NE(csv.find("\r\n5,-2,-3,13,2\r\n"), std::string::npos);
}

TEST_F(CliTest, ClassifyTie) {
  ASSERT_EQ(call({"--json", path("t.json"), "classify", "--coords", "1,0 0,1 -1,-1"}).code, kExitPass);
  const auto j = load("t.json");
  EXPECT_EQ(j["results"]["label"], json({3, 1, 2}));
  EXPECT_EQ(j["results"]["interior"], false);
  EXPECT_EQ(j["results"]["ties"], json::parse("[[1,2]]"));
}

TEST_F(CliTest, ClassifyInputErrors) {
  const auto zero = call({"classify", "--coords", "0,0 0,0 0,0"});
  EXPECT_EQ(zero.code, kExitUsage);
  EXPECT_NE(zero.err.find("PV"), std::string::npos);
  const auto off = call({"classify", "--coords", "1,0 1,0 1,1"});
  EXPECT_EQ(off.code, kExitUsage);
  EXPECT_NE(off.err.find("--project"), std::string::npos);
  EXPECT_EQ(call({"classify", "--coords", "a,b c,d e,f"}).code, kExitUsage);
  EXPECT_EQ(call({"classify", "--coords", "1,0 -1,0 0,0", "--sylow"}).code, kExitUsage);
  EXPECT_EQ(call({"classify", "--point", path("missing.txt")}).code, kExitUsage);
}

TEST_F(CliTest, ClassifyFromFileWithProjection) {
  {
    std::ofstream f(path("p.txt"));
    f << "# a point\n6,0\n\n1,3\n-1,0\n0,0\n-1,-3\n";
  }
  ASSERT_EQ(call({"--json", path("p.json"), "classify", "--point", path("p.txt"), "--project", "--sylow"}).code,
            kExitPass);
  const auto j = load("p.json");
  EXPECT_EQ(j["results"]["label"], json({1, 5, 2, 3, 4}));
  EXPECT_EQ(j["results"]["sylow_region"]["order"].size(), 6u);
}

TEST_F(CliTest, ParseCoords) {
  const auto c = parse_coords("  5,0\t0,3  -2.5,1e-3 ");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[2], std::complex<double>(-2.5, 1e-3));
  EXPECT_THROW(parse_coords("1,2,3"), InvalidArgument);
  EXPECT_THROW(parse_coords("1"), InvalidArgument);
}

TEST_F(CliTest, DecomposeFive) {
  const auto r = call({"--json", path("d.json"), "--csv", path("d.csv"), "decompose", "--n", "5"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto j = load("d.json");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["results"]["herm_character"], json({16, 4, 0, 1, 1, 0, 1}));
  std::vector<std::vector<int>> support;
  for (const auto& e : j["results"]["irreps"]) {
    if (e["multiplicity"] == 1) support.push_back(e["irrep"].get<std::vector<int>>());
    else EXPECT_EQ(e["multiplicity"], 0);
  }
  EXPECT_EQ(support, (std::vector<std::vector<int>>{{5}, {4, 1}, {3, 2}, {3, 1, 1}}));
  EXPECT_EQ(j["results"]["total_rank"], 16);
  const auto csv = slurp(dir_ / "d.csv");
  EXPECT_NE(csv.find("\"(3,2)\",1,1,0,5,5,true\r\n"), std::string::npos);
}

TEST_F(CliTest, DecomposeThreeMarksAbsentSlot) {
  ASSERT_EQ(call({"--json", path("d3.json"), "decompose", "--n", "3"}).code, kExitPass);
  const auto j = load("d3.json");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["results"]["n_minus_2_2_absent"], true);
}

TEST_F(CliTest, ChambersDeterministic) {
  ASSERT_EQ(call({"--seed", "7", "--json", path("a.json"), "chambers", "--n", "4", "--samples", "3000"}).code,
            kExitPass);
  ASSERT_EQ(call({"--seed", "7", "--json", path("b.json"), "chambers", "--n", "4", "--samples", "3000",
                  "--workers", "3"})
                .code,
            kExitPass);
  EXPECT_EQ(slurp(dir_ / "a.json"), slurp(dir_ / "b.json"));
  const auto j = load("a.json");
  EXPECT_EQ(j["parameters"]["seed"], 7);
  EXPECT_EQ(j["results"]["chambers_occupied"], 24);
  EXPECT_EQ(j["results"]["boundary_hits"], 0);
  EXPECT_TRUE(j["results"]["occupancy"].contains("[1,2,3,4]"));
}

TEST_F(CliTest, SeedFromEnvironment) {
  setenv("TALBOT_SEED", "7", 1);
  ASSERT_EQ(call({"--json", path("e.json"), "chambers", "--n", "4", "--samples", "500"}).code, kExitPass);
  unsetenv("TALBOT_SEED");
  ASSERT_EQ(call({"--seed", "7", "--json", path("f.json"), "chambers", "--n", "4", "--samples", "500"}).code,
            kExitPass);
  EXPECT_EQ(slurp(dir_ / "e.json"), slurp(dir_ / "f.json"));
  setenv("TALBOT_SEED", "seven", 1);
  EXPECT_EQ(call({"chambers", "--n", "4", "--samples", "10"}).code, kExitUsage);
}

TEST_F(CliTest, SylowVerifyAndExport) {
  const auto r = call({"--json", path("s.json"), "sylow", "--verify", "--export", path("basis.json")});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("Sylow 5-subgroups of S_5: 6"), std::string::npos);
  const auto j = load("s.json");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["results"]["subgroups"].size(), 6u);
  const auto b = load("basis.json");
  ASSERT_EQ(b["forms"].size(), 6u);
  for (const auto& f : b["forms"]) {
    ASSERT_EQ(f["matrix"].size(), 5u);
    for (std::size_t r = 0; r < 5; ++r) {
      ASSERT_EQ(f["matrix"][r].size(), 5u);
      double re = 0.0;
      double im = 0.0;
      double col_re = 0.0;
      for (std::size_t c = 0; c < 5; ++c) {
        re += f["matrix"][r][c]["re"].get<double>();
        im += f["matrix"][r][c]["im"].get<double>();
        col_re += f["matrix"][c][r]["re"].get<double>();
      }
      EXPECT_NEAR(re, 0.0, 1e-12);
      EXPECT_NEAR(im, 0.0, 1e-12);
      EXPECT_NEAR(col_re, 0.0, 1e-12);
    }
  }
}

TEST_F(CliTest, SylowRegions) {
  ASSERT_EQ(call({"--seed", "3", "--json", path("r.json"), "--csv", path("r.csv"), "sylow", "--samples", "2000"})
                .code,
            kExitPass);
  const auto j = load("r.json");
  EXPECT_EQ(j["results"]["regions"]["samples"], 2000);
  EXPECT_EQ(j["results"]["regions"]["boundary_samples"], 0);
  EXPECT_EQ(slurp(dir_ / "r.csv").substr(0, 16), "ordering,count\r\n");
}

TEST(Report, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
  std::ostringstream os;
  write_csv_row(os, {"x", "(3,2)", ""});
  EXPECT_EQ(os.str(), "x,\"(3,2)\",\r\n");
}

}  // namespace
}  // namespace talbot::cli
