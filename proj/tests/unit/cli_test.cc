// Copyright 2026 The cachemarket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "table.h"

namespace cachemarket::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunTool(std::vector<std::string> args) {
  args.insert(args.begin(), "cachemarket");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    path_ = (std::filesystem::temp_directory_path() /
             ("cachemarket_cli_test_" + std::to_string(counter_++) + ".yaml"))
                .string();
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::string path_;
};

TEST(Cli, DelayBaseline) {
  const Result r = RunTool({"delay", "--preset", "baseline"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Table t = ParseCsv(r.out);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_NEAR(t.Number(0, "backhaul"), 0.0051, 2e-4);
  EXPECT_EQ(t.rows[0][t.Column("status")], "infeasible");
}

TEST(Cli, DelayRequireFeasibleExitsThree) {
  const Result r = RunTool({"delay", "--require-feasible"});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_NE(r.err.find("lambda lower bound"), std::string::npos);
}

TEST(Cli, HitprobBoth) {
  const Result r = RunTool({"hitprob", "--F", "1000", "--nu", "0.5", "--S", "30",
                        "--method", "both"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Table t = ParseCsv(r.out);
  EXPECT_EQ(t.header, (std::vector<std::string>{"F", "nu", "S", "p_hit_exact",
                                                "p_hit_asymptotic",
                                                "rel_error"}));
  EXPECT_LT(t.Number(0, "rel_error"), 0.01);
}

TEST(Cli, HitprobRejectsPole) {
  EXPECT_EQ(RunTool({"hitprob", "--nu", "1"}).code, kExitConfig);
}

TEST(Cli, EmptySweepIsHeaderOnly) {
  TempFile f("sweep:\n  variable: network.lambda\n  grid: []\n");
  for (const char* cmd : {"coverage", "hitprob", "delay", "mno-solve"}) {
    const Result r = RunTool({cmd, "--config", f.path()});
    EXPECT_EQ(r.code, kExitOk) << cmd << r.err;
    const Table t = ParseCsv(r.out);
    EXPECT_TRUE(t.rows.empty()) << cmd;
    EXPECT_EQ(t.header.front(), "network.lambda") << cmd;
  }
}

TEST(Cli, SweepRowsInGridOrder) {
  TempFile f(
      "sweep:\n  variable: network.lambda\n"
      "  grid: [1e-3, 1e-6, 1e-4, 1e-5, 3e-3, 2e-6]\n");
  const Result r = RunTool({"coverage", "--config", f.path()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Table t = ParseCsv(r.out);
  const std::vector<double> grid{1e-3, 1e-6, 1e-4, 1e-5, 3e-3, 2e-6};
  ASSERT_EQ(t.rows.size(), grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(t.Number(i, "network.lambda"), grid[i]);
    EXPECT_EQ(t.Number(i, "lambda"), grid[i]);
  }
}

TEST(Cli, ParseErrorExitsTwoWithLocation) {
  TempFile f("network:\n  alpha: [5\n");
  const Result r = RunTool({"coverage", "--config", f.path()});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("line"), std::string::npos);
  EXPECT_NE(r.err.find("column"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(RunTool({}).code, kExitConfig);
  EXPECT_EQ(RunTool({"bogus"}).code, kExitConfig);
  EXPECT_EQ(RunTool({"coverage", "--preset", "other"}).code, kExitConfig);
  EXPECT_EQ(RunTool({"coverage", "--config", "/nonexistent.yaml"}).code,
            kExitConfig);
  EXPECT_EQ(RunTool({"reproduce", "--figure", "13"}).code, kExitConfig);
  EXPECT_EQ(RunTool({"coverage", "--format", "json"}).code, kExitConfig);
  EXPECT_EQ(RunTool({"coverage", "--help"}).code, kExitOk);
}

TEST(Cli, SolveReportIsConsistent) {
  const Result r = RunTool({"solve"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["provenance"]["version"], "1.0.0");
  EXPECT_EQ(j["provenance"]["config_hash"].get<std::string>().size(), 16u);
  EXPECT_EQ(j["provenance"]["seed"], 42);
  const auto& m = j["market"];
  EXPECT_EQ(m["omega_star"].get<double>(), 1e6);
  EXPECT_NEAR(m["z_star"].get<double>(), 4.938806003671375e-07, 1e-18);
  EXPECT_EQ(m["iterations"], 7);
  const auto& sh = j["sharing"];
  const double total = sh["total_rent"];
  EXPECT_NEAR(total, m["revenue"].get<double>(), 1e-12 * total);
  std::vector<double> psi;
  for (const auto& s : sh["shares"]) psi.push_back(s["psi"]);
  ASSERT_EQ(psi.size(), 3u);
  EXPECT_LT(psi[0], psi[1]);
  EXPECT_LT(psi[1], psi[2]);
  EXPECT_NEAR(std::accumulate(psi.begin(), psi.end(), 0.0), total,
              1e-12 * total);
  EXPECT_EQ(j["followers"].size(), 3u);
  EXPECT_EQ(j["followers"][0]["feasibility"]["status"], "feasible");
}

TEST(Cli, SolveCsvMatchesJson) {
  const Result csv = RunTool({"solve", "--format", "csv"});
  ASSERT_EQ(csv.code, kExitOk) << csv.err;
  const Table t = ParseCsv(csv.out);
  const auto j = nlohmann::json::parse(RunTool({"solve"}).out);
  EXPECT_EQ(t.Number(0, "z_star"), j["market"]["z_star"].get<double>());
  EXPECT_EQ(t.rows[0][t.Column("config_hash")],
            j["provenance"]["config_hash"].get<std::string>());
}

TEST(Cli, SingleMnoPaysTheWholeRent) {
  TempFile f("mnos:\n  - name: solo\n");
  const Result r = RunTool({"solve", "--config", f.path(), "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Table t = ParseCsv(r.out);
  EXPECT_EQ(t.Number(0, "psi_solo"), t.Number(0, "total_rent"));
}

TEST(Cli, TinyDeadlineIsInfeasible) {
  TempFile f("budget:\n  d_th: 1e-7\n");
  for (const char* cmd : {"solve", "mno-solve"}) {
    const Result r = RunTool({cmd, "--config", f.path()});
    EXPECT_EQ(r.code, kExitInfeasible) << cmd;
    EXPECT_NE(r.err.find("fronthaul"), std::string::npos) << r.err;
  }
}

TEST(Cli, MnoSolveFollowerTable) {
  const Result r = RunTool({"mno-solve", "--omega", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Table t = ParseCsv(r.out);
  ASSERT_EQ(t.rows.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_LT(t.Number(k, "duality_gap"), 1e-9);
    EXPECT_EQ(t.Number(k, "r_star"), 1.0);
  }
}

TEST(Cli, MnoSolveFlatPopularityUsesFixedIntensity) {
  TempFile f("catalog:\n  nu: 0.7\nbudget:\n  d_th: 2\n");
  const Result r = RunTool({"mno-solve", "--config", f.path()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Table t = ParseCsv(r.out);
  EXPECT_EQ(t.rows[0][t.Column("method")], "fixed_intensity");
  // The leader needs nu > 1.
  EXPECT_EQ(RunTool({"solve", "--config", f.path()}).code, kExitConfig);
}

TEST(Cli, WritesToOutPath) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "cachemarket_cli_out.csv")
          .string();
  const Result r = RunTool({"coverage", "--out", path});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), RunTool({"coverage"}).out);
  std::remove(path.c_str());
}

TEST(Cli, ReproduceFigureEleven) {
  const Result r = RunTool({"reproduce", "--figure", "11"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Table t = ParseCsv(r.out);
  ASSERT_EQ(t.rows.size(), 90u);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double total = t.Number(i, "total_rent");
    const double sum = t.Number(i, "psi_MNO-1") + t.Number(i, "psi_MNO-2") +
                       t.Number(i, "psi_MNO-3");
    EXPECT_NEAR(sum, total, 1e-12 * total);
  }
}

TEST(Cli, ReproduceFigureFour) {
  const Result r = RunTool({"reproduce", "--figure", "4"});
  ASSERT_EQ(r.code, kExitOk);
  const Table t = ParseCsv(r.out);
  EXPECT_EQ(t.header, (std::vector<std::string>{"S", "rel_error_nu0.5",
                                                "rel_error_nu1.5",
                                                "rel_error_nu2.5"}));
  EXPECT_EQ(t.rows.size(), 1000u);
}

TEST(Cli, ValidateBaselinePasses) {
  const Result r = RunTool({"validate", "--preset", "baseline", "--seed", "42"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  const Table t = ParseCsv(r.out);
  for (const Row& row : t.rows) EXPECT_EQ(row.back(), "pass") << row.front();
  // Same seed, same bytes.
  EXPECT_EQ(RunTool({"validate", "--seed", "42"}).out, r.out);
}

TEST(Cli, ValidateCatchesCorruptedBeta) {
  const Result r = RunTool({"validate", "--beta-scale", "1.1"});
  EXPECT_EQ(r.code, kExitValidation);
  const Table t = ParseCsv(r.out);
  EXPECT_EQ(t.rows[0][0], "coverage");
  EXPECT_EQ(t.rows[0].back(), "fail");
}

TEST(Cli, SolveIsReproducible) {
  EXPECT_EQ(RunTool({"solve"}).out, RunTool({"solve"}).out);
}

}  // namespace
}  // namespace cachemarket::cli
