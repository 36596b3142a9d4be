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

#ifndef BELLMAX_TOOLS_COMMANDS_H_
#define BELLMAX_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bellmax/csv.h"
#include "bellmax/qstate.h"
#include "bellmax/survey.h"

namespace bellmax::cli {

inline constexpr std::uint64_t kDefaultSeed = 0xB311;

// Where a command gets its state: a density-matrix JSON file or an inline
// spectrum ("0.6,0.2,0.1,0.1") in the GHZ-basis order of the family
// (Phi+, Phi-, Psi+, Psi- for two qubits).
struct StateSource {
  std::string state_file;
  std::string spectrum;
};

struct OptimizeFlags {
  int starts = 0;  // 0 = family default
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
};

std::vector<double> parse_spectrum(const std::string& text);

// Rounds to the 9 significant digits every output format uses.
double round9(double value);

// method: "closed" (Bell-diagonal input only) or "optimize".
nlohmann::ordered_json cmd_chsh(const StateSource& source,
                                const std::string& method,
                                const OptimizeFlags& flags);

// method: "bound", "angles" (GHZ-diagonal input only) or "optimize".
nlohmann::ordered_json cmd_mermin(const StateSource& source,
                                  const std::string& method,
                                  const OptimizeFlags& flags);

// method: "bound" (GHZ-diagonal input only) or "optimize".
nlohmann::ordered_json cmd_mabk(const StateSource& source,
                                const std::string& method,
                                const OptimizeFlags& flags);

// family: chsh-R, chsh-lambda or mermin-R. Columns
// measure,x,b_max,family_state; steps + 1 rows from `from` to `to`.
CsvTable cmd_frontier(const std::string& family, double from, double to,
                      int steps);

// Columns x,g,concurrence,participation_ratio,b_max.
CsvTable cmd_mems(double from, double to, int steps);

// region: "I" or "II". Columns
// x,region,participation_ratio,lambda_max,concurrence,b_max.
CsvTable cmd_mnms(const std::string& region, double from, double to,
                  int steps);

// Columns x,participation_ratio,mermin_bound,frontier,ppt_1,ppt_2,ppt_3,
// category.
CsvTable cmd_werner3(double from, double to, int steps);

// Columns n,p,sin2alpha,leading_violation,lvm_bound,violates.
CsvTable cmd_ghz(int parties, double p_from, double p_to, int steps);

// Echoes the correlator rows with b_max (2 sites) or mermin_bound
// (3 sites) and violates appended.
CsvTable cmd_chain(const std::string& csv_text, int sites);

struct SurveyFiles {
  std::string categories_csv;
  std::string histogram_csv;
  std::string summary_json;
};

SurveyFiles render_survey(const SurveyStats& stats,
                          const SurveyOptions& options);

// Writes categories.csv, histogram.csv and summary.json into `out_dir`,
// creating it if needed.
void write_survey(const SurveyFiles& files, const std::string& out_dir);

// Table as CSV text, or as a JSON array of row objects.
std::string render_table(const CsvTable& table, const std::string& format);
std::string render_json(const nlohmann::ordered_json& j,
                        const std::string& format);

}  // namespace bellmax::cli

#endif  // BELLMAX_TOOLS_COMMANDS_H_
