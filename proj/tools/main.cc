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

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bellmax/csv.h"
#include "bellmax/errors.h"
#include "bellmax/survey.h"
#include "commands.h"

namespace {

using bellmax::cli::kDefaultSeed;

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format;
};

void emit(const std::string& text, const Globals& g) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    bellmax::write_text_file(g.out, text);
  }
}

struct Sweep {
  double from = 0.0;
  double to = 1.0;
  int steps = 100;
};

void add_sweep(CLI::App* cmd, Sweep& s, double from, double to) {
  s.from = from;
  s.to = to;
  cmd->add_option("--from", s.from, "First sweep point")->capture_default_str();
  cmd->add_option("--to", s.to, "Last sweep point")->capture_default_str();
  cmd->add_option("--steps", s.steps, "Number of intervals")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal Bell violations, mixedness frontiers and three-qubit "
               "distillability"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "RNG seed (default 0xB311)");
  app.add_option("--out", g.out,
                 "Output file (survey: output directory); stdout if omitted");
  app.add_option("--format", g.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  bellmax::cli::StateSource source;
  bellmax::cli::OptimizeFlags opt;
  std::string chsh_method = "optimize";
  std::string mermin_method = "angles";
  std::string mabk_method = "bound";
  auto add_state = [&](CLI::App* cmd, std::string& method,
                       const std::vector<std::string>& methods) {
    cmd->add_option("--state", source.state_file, "Density-matrix JSON file");
    cmd->add_option("--spectrum", source.spectrum,
                    "Inline spectrum in basis order, comma separated");
    cmd->add_option("--method", method)
        ->check(CLI::IsMember(methods))
        ->capture_default_str();
    cmd->add_option("--starts", opt.starts, "Optimizer starts (0 = default)");
    cmd->add_option("--workers", opt.workers, "Optimizer threads");
  };

  auto* chsh = app.add_subcommand("chsh", "Two-qubit CHSH maximum");
  add_state(chsh, chsh_method, {"closed", "optimize"});
  auto* mermin = app.add_subcommand("mermin", "Three-qubit Mermin maximum");
  add_state(mermin, mermin_method, {"bound", "angles", "optimize"});
  auto* mabk = app.add_subcommand("mabk", "Four-qubit MABK maximum");
  add_state(mabk, mabk_method, {"bound", "optimize"});

  auto* frontier = app.add_subcommand("frontier", "Mixedness frontier sweep");
  std::string family = "chsh-R";
  frontier->add_option("--family", family)
      ->check(CLI::IsMember({"chsh-R", "chsh-lambda", "mermin-R"}))
      ->capture_default_str();
  Sweep frontier_sweep;
  add_sweep(frontier, frontier_sweep, 1.0, 4.0);

  auto* mems = app.add_subcommand("mems", "MEMS family sweep");
  Sweep mems_sweep;
  add_sweep(mems, mems_sweep, 0.0, 1.0);

  auto* mnms = app.add_subcommand("mnms", "MNMS family sweep");
  std::string region = "I";
  mnms->add_option("--region", region)
      ->check(CLI::IsMember({"I", "II"}))
      ->capture_default_str();
  Sweep mnms_sweep;
  add_sweep(mnms, mnms_sweep, 0.0, 0.5);

  auto* werner = app.add_subcommand("werner3", "Three-qubit Werner sweep");
  Sweep werner_sweep;
  add_sweep(werner, werner_sweep, 0.0, 1.0);

  auto* survey = app.add_subcommand("survey", "Monte Carlo distillability survey");
  bellmax::SurveyOptions survey_opts;
  survey->add_option("--samples", survey_opts.samples)->capture_default_str();
  survey->add_option("--bins", survey_opts.bins)->capture_default_str();
  survey->add_option("--workers", survey_opts.workers)->capture_default_str();
  survey->add_flag("--check-ppt", survey_opts.cross_check_ppt,
                   "Cross-check PPT flags against explicit partial transposes");

  auto* ghz = app.add_subcommand("ghz", "Generalized GHZ threshold sweep");
  int parties = 3;
  ghz->add_option("--n", parties, "Number of parties (>= 3)")
      ->capture_default_str();
  Sweep ghz_sweep;
  add_sweep(ghz, ghz_sweep, 0.0, 0.5);

  auto* chain = app.add_subcommand("chain", "Spin-chain correlator bounds");
  std::string input;
  int sites = 2;
  chain->add_option("--input", input, "Correlator CSV")->required();
  chain->add_option("--sites", sites)
      ->check(CLI::IsMember({2, 3}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  namespace cli = bellmax::cli;
  try {
    opt.seed = g.seed;
    const std::string table_format = g.format.empty() ? "csv" : g.format;
    const std::string json_format = g.format.empty() ? "json" : g.format;
    if (chsh->parsed()) {
      emit(cli::render_json(cli::cmd_chsh(source, chsh_method, opt), json_format), g);
    } else if (mermin->parsed()) {
      emit(cli::render_json(cli::cmd_mermin(source, mermin_method, opt), json_format),
           g);
    } else if (mabk->parsed()) {
      emit(cli::render_json(cli::cmd_mabk(source, mabk_method, opt), json_format), g);
    } else if (frontier->parsed()) {
      emit(cli::render_table(
               cli::cmd_frontier(family, frontier_sweep.from,
                                 frontier_sweep.to, frontier_sweep.steps),
               table_format),
           g);
    } else if (mems->parsed()) {
      emit(cli::render_table(cli::cmd_mems(mems_sweep.from, mems_sweep.to,
                                           mems_sweep.steps),
                             table_format),
           g);
    } else if (mnms->parsed()) {
      emit(cli::render_table(cli::cmd_mnms(region, mnms_sweep.from,
                                           mnms_sweep.to, mnms_sweep.steps),
                             table_format),
           g);
    } else if (werner->parsed()) {
      emit(cli::render_table(cli::cmd_werner3(werner_sweep.from,
                                              werner_sweep.to,
                                              werner_sweep.steps),
                             table_format),
           g);
    } else if (survey->parsed()) {
      survey_opts.seed = g.seed;
      const bellmax::SurveyStats stats = bellmax::survey(survey_opts);
      const cli::SurveyFiles files = cli::render_survey(stats, survey_opts);
      if (g.out.empty()) {
        std::cout << files.summary_json;
      } else {
        cli::write_survey(files, g.out);
      }
    } else if (ghz->parsed()) {
      emit(cli::render_table(cli::cmd_ghz(parties, ghz_sweep.from,
                                          ghz_sweep.to, ghz_sweep.steps),
                             table_format),
           g);
    } else if (chain->parsed()) {
      emit(cli::render_table(
               cli::cmd_chain(bellmax::read_text_file(input), sites),
               table_format),
           g);
    }
  } catch (const bellmax::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bellmax::exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
