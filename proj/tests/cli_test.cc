// Copyright 2026 The bellmax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "bellmax/chsh.h"
#include "bellmax/csv.h"
#include "bellmax/errors.h"
#include "bellmax/spin_chain.h"
#include "bellmax/state_io.h"
#include "commands.h"
#include "test_util.h"

namespace bellmax::cli {
namespace {

namespace fs = std::filesystem;
using testing::code_of;

const std::string kCli = BELLMAX_CLI_PATH;
const std::string kFixtureDir = BELLMAX_FIXTURE_DIR;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bellmax_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  // Runs the tool with stdout captured into `stdout_text`; returns the exit
  // status.
  int run(const std::string& args, std::string* stdout_text = nullptr) {
    const std::string out = path("stdout.txt");
    const std::string cmd =
        "'" + kCli + "' " + args + " > '" + out + "' 2> '" + path("stderr.txt") + "'";
    const int raw = std::system(cmd.c_str());
    if (stdout_text != nullptr) *stdout_text = read_text_file(out);
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }

  fs::path dir_;
};

TEST(ParseSpectrumTest, ParsesAndRejects) {
  EXPECT_EQ(parse_spectrum("0.5, 0.25,0.25"),
            (std::vector<double>{0.5, 0.25, 0.25}));
  EXPECT_EQ(code_of([] { parse_spectrum(""); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_spectrum("0.5,x"); }), ErrorCode::kParseError);
}

TEST(Round9Test, KeepsNineDigits) {
  EXPECT_EQ(round9(2 * std::sqrt(2.0)), 2.82842712);
  EXPECT_EQ(round9(0.25), 0.25);
}

TEST(CommandTest, ChshClosedAndOptimizedAgree) {
  const StateSource src{"", "0.7,0.1,0.1,0.1"};
  const auto closed = cmd_chsh(src, "closed", {});
  const auto opt = cmd_chsh(src, "optimize", {});
  EXPECT_EQ(closed["method"], "closed");
  EXPECT_NEAR(closed["value"].get<double>(), opt["value"].get<double>(), 1e-8);
  EXPECT_NEAR(closed["value"].get<double>(),
              chsh_max_bell_diagonal(BellDiagonalSpectrum({0.7, 0.1, 0.1, 0.1})),
              1e-8);
  EXPECT_EQ(opt["settings"].size(), 2u);
  EXPECT_NEAR(closed["concurrence"].get<double>(), 0.4, 1e-8);
}

TEST(CommandTest, StateSourceErrors) {
  EXPECT_EQ(code_of([] { cmd_chsh({}, "closed", {}); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { cmd_chsh({"a.json", "1,0,0,0"}, "closed", {}); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { cmd_chsh({"", "0.5,0.25,0.25"}, "closed", {}); }),
            ErrorCode::kBadSpectrum);
  EXPECT_EQ(code_of([] { cmd_chsh({"", "1,0,0,0"}, "nope", {}); }),
            ErrorCode::kParseError);
}

TEST(CommandTest, MerminMethods) {
  const StateSource ghz{"", "1,0,0,0,0,0,0,0"};
  const auto angles = cmd_mermin(ghz, "angles", {});
  EXPECT_NEAR(angles["value"].get<double>(), 4.0, 1e-8);
  EXPECT_EQ(angles["category"], "distillable_nonlocal");
  EXPECT_EQ(angles["distillable"], true);
  const auto bound = cmd_mermin(ghz, "bound", {});
  EXPECT_NEAR(bound["value"].get<double>(), 4.0, 1e-8);
  const auto uniform = cmd_mermin({"", "0.125,0.125,0.125,0.125,0.125,0.125,0.125,0.125"},
                                  "bound", {});
  EXPECT_EQ(uniform["value"].get<double>(), 0.0);
  EXPECT_EQ(uniform["category"], "bound_local");
}

TEST(CommandTest, MabkBound) {
  std::string s = "1";
  for (int i = 1; i < 16; ++i) s += ",0";
  EXPECT_NEAR(cmd_mabk({"", s}, "bound", {})["value"].get<double>(),
              4 * std::sqrt(2.0), 1e-8);
}

TEST(CommandTest, TablesHaveHeadersAndRowCounts) {
  const CsvTable f = cmd_frontier("chsh-R", 1, 4, 30);
  EXPECT_EQ(f.header, (std::vector<std::string>{"measure", "x", "b_max",
                                                "family_state"}));
  EXPECT_EQ(f.rows.size(), 31u);
  EXPECT_EQ(f.rows.front()[2], "2.82842712");
  EXPECT_EQ(f.rows.back()[2], "0");
  EXPECT_EQ(cmd_frontier("mermin-R", 1, 8, 7).rows.back()[2], "0");
  EXPECT_EQ(code_of([] { cmd_frontier("bogus", 1, 4, 3); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { cmd_frontier("chsh-R", 1, 4, 0); }),
            ErrorCode::kOutOfRange);
  EXPECT_EQ(cmd_mems(0, 1, 10).rows.size(), 11u);
  EXPECT_EQ(cmd_mnms("II", 0, 0.25, 5).rows[0][1], "II");
  EXPECT_EQ(cmd_werner3(0, 1, 4).header.back(), "category");
  const CsvTable g = cmd_ghz(3, 0, 0.5, 10);
  EXPECT_EQ(g.rows.front().back(), "false");
  EXPECT_EQ(g.rows.back().back(), "true");
}

TEST(CommandTest, ChainAppendsColumns) {
  const CsvTable t =
      cmd_chain("site_config,T_xx,T_yy,T_zz,T_xy\ns,-1,-1,-1,0\n", 2);
  EXPECT_EQ(t.header.back(), "violates");
  EXPECT_EQ(t.rows[0][5], "2.82842712");
  EXPECT_EQ(t.rows[0][6], "true");
  EXPECT_EQ(code_of([] { cmd_chain("site_config\n", 4); }),
            ErrorCode::kOutOfRange);
}

TEST(CommandTest, RenderTableCsvRoundTrip) {
  const CsvTable t = cmd_frontier("chsh-lambda", 0.25, 1, 12);
  const CsvTable back = parse_csv(render_table(t, "csv"));
  EXPECT_EQ(back.header, t.header);
  EXPECT_EQ(back.rows, t.rows);
  const auto rows = nlohmann::json::parse(render_table(t, "json"));
  ASSERT_EQ(rows.size(), 13u);
  EXPECT_EQ(rows[0]["family_state"], t.rows[0][3]);
}

TEST_F(CliTest, SuccessfulCommandsExitZero) {
  std::string out;
  EXPECT_EQ(run("chsh --spectrum 1,0,0,0 --method closed", &out), 0);
  const auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j["value"].get<double>(), 2.82842712);

  write_density_file(werner2(0.5), path("werner.json"));
  EXPECT_EQ(run("chsh --state '" + path("werner.json") + "'", &out), 0);
  EXPECT_NEAR(nlohmann::json::parse(out)["value"].get<double>(), std::sqrt(2.0),
              1e-8);

  EXPECT_EQ(run("frontier --family mermin-R --from 1 --to 8 --steps 7", &out), 0);
  EXPECT_EQ(parse_csv(out).rows.size(), 8u);

  EXPECT_EQ(run("--format json mems --steps 4", &out), 0);
  EXPECT_EQ(nlohmann::json::parse(out).size(), 5u);
}

TEST_F(CliTest, ErrorsMapToExitCodes) {
  EXPECT_EQ(run("chsh --state '" + path("missing.json") + "'"),
            exit_status(ErrorCode::kIoError));
  write_text_file(path("bad.json"), "{\"dim\": 2, \"re\": [[1]]");
  EXPECT_EQ(run("chsh --state '" + path("bad.json") + "'"),
            exit_status(ErrorCode::kParseError));
  write_text_file(path("neg.json"),
                  "{\"dim\":2,\"re\":[[1.5,0],[0,-0.5]],\"im\":[[0,0],[0,0]]}");
  EXPECT_EQ(run("chsh --state '" + path("neg.json") + "'"),
            exit_status(ErrorCode::kNotPsd));
  EXPECT_EQ(run("mermin --spectrum 0.5,0.5,0.5,0,0,0,0,0"),
            exit_status(ErrorCode::kBadSpectrum));
  EXPECT_EQ(run("ghz --n 2"), exit_status(ErrorCode::kBadPartyCount));
  write_text_file(path("schema.csv"), "site_config,T_xx\na,0\n");
  EXPECT_EQ(run("chain --input '" + path("schema.csv") + "'"),
            exit_status(ErrorCode::kSchemaMismatch));
  EXPECT_EQ(exit_status(ErrorCode::kIoError), 10 + 17);
}

TEST_F(CliTest, ChainFixtureNeverViolates) {
  std::string out;
  ASSERT_EQ(run("chain --sites 2 --input '" + kFixtureDir + "/xy_chain_2site.csv'",
                &out),
            0);
  const CsvTable t = parse_csv(out);
  const int col = t.column("violates");
  ASSERT_GE(col, 0);
  for (const auto& row : t.rows) EXPECT_EQ(row[col], "false");
  const CsvTable input =
      parse_csv(read_text_file(kFixtureDir + "/xy_chain_2site.csv"));
  ASSERT_EQ(input.rows.size(), t.rows.size());
  for (size_t r = 0; r < t.rows.size(); ++r) {
    EXPECT_TRUE(std::equal(input.rows[r].begin(), input.rows[r].end(),
                           t.rows[r].begin()));
  }
}

TEST_F(CliTest, SurveyOutputIsByteIdentical) {
  const std::string args = "--seed 99 survey --samples 30000 --bins 20";
  ASSERT_EQ(run(args + " --workers 1 --out '" + path("a") + "' --check-ppt"), 0);
  ASSERT_EQ(run(args + " --workers 8 --out '" + path("b") + "' --check-ppt"), 0);
  ASSERT_EQ(run(args + " --workers 1 --out '" + path("c") + "' --check-ppt"), 0);
  for (const char* f : {"categories.csv", "histogram.csv", "summary.json"}) {
    const std::string a = read_text_file(path("a") + "/" + f);
    EXPECT_FALSE(a.empty()) << f;
    EXPECT_EQ(a, read_text_file(path("b") + "/" + f)) << f;
    EXPECT_EQ(a, read_text_file(path("c") + "/" + f)) << f;
  }
  const auto summary =
      nlohmann::json::parse(read_text_file(path("a") + "/summary.json"));
  EXPECT_EQ(summary["samples"], 30000);
  EXPECT_EQ(summary["seed"], 99);
  EXPECT_EQ(summary["ppt_mismatches"], 0);
  EXPECT_EQ(parse_csv(read_text_file(path("a") + "/histogram.csv")).rows.size(),
            20u);
}

}  // namespace
}  // namespace bellmax::cli
