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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "bellmax/bell_operators.h"
#include "bellmax/chsh.h"
#include "bellmax/errors.h"
#include "bellmax/mabk.h"
#include "bellmax/mermin.h"
#include "bellmax/paired_spectrum.h"
#include "bellmax/spin_chain.h"
#include "bellmax/state_io.h"
#include "bellmax/violation_optimizer.h"

namespace bellmax::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct LoadedState {
  DensityMatrix rho;
  std::optional<std::vector<double>> spectrum;  // when given inline
};

LoadedState load_state(const StateSource& source, int parties) {
  if (!source.state_file.empty() && !source.spectrum.empty()) {
    fail(ErrorCode::kParseError, "give either --state or --spectrum, not both");
  }
  if (!source.spectrum.empty()) {
    std::vector<double> values = parse_spectrum(source.spectrum);
    const PairedSpectrum paired = PairedSpectrum::from_pairs(values, parties);
    return {paired.state(), values};
  }
  if (source.state_file.empty()) {
    fail(ErrorCode::kParseError, "a state is required (--state or --spectrum)");
  }
  DensityMatrix rho = read_density_file(source.state_file);
  if (rho.dim() != (1 << parties)) {
    fail(ErrorCode::kDimensionMismatch,
         "expected a " + std::to_string(parties) + "-qubit state, got dim " +
             std::to_string(rho.dim()));
  }
  return {rho, std::nullopt};
}

ordered_json settings_json(const ObserverSettings& s) {
  ordered_json parties = ordered_json::array();
  for (int k = 0; k < s.n_parties(); ++k) {
    ordered_json party;
    for (int w = 0; w < 2; ++w) {
      const Direction& d = s.direction(k, w);
      party[w == 0 ? "a" : "b"] = {{"theta", round9(d.theta)},
                                   {"phi", round9(d.phi)}};
    }
    parties.push_back(party);
  }
  return parties;
}

void add_mixedness(ordered_json& out, const DensityMatrix& rho) {
  const MixednessScalars m = mixedness(rho);
  out["R"] = round9(m.participation_ratio);
  out["lambda_max"] = round9(m.max_eigenvalue);
}

ordered_json optimize_json(const DensityMatrix& rho, const BellFamily& family,
                           const OptimizeFlags& flags) {
  OptimizerOptions options;
  options.starts = flags.starts;
  options.seed = flags.seed;
  options.workers = flags.workers;
  const OptimizationReport r = maximize_violation(rho, family, options);
  ordered_json out;
  out["value"] = round9(r.value);
  out["method"] = "optimize";
  out["starts"] = r.starts;
  out["converged_fraction"] = round9(r.converged_fraction);
  out["settings"] = settings_json(r.settings);
  return out;
}

void check_steps(double from, double to, int steps) {
  if (steps < 1) fail(ErrorCode::kOutOfRange, "steps must be >= 1");
  if (!std::isfinite(from) || !std::isfinite(to)) {
    fail(ErrorCode::kOutOfRange, "sweep bounds must be finite");
  }
}

double sweep_point(double from, double to, int steps, int i) {
  if (i == steps) return to;
  return from + (to - from) * static_cast<double>(i) / steps;
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<double> parse_spectrum(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  int index = 0;
  while (std::getline(ss, item, ',')) {
    values.push_back(
        parse_number(item, "spectrum entry " + std::to_string(index++)));
  }
  if (values.empty()) fail(ErrorCode::kParseError, "empty spectrum");
  return values;
}

double round9(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(format_number(value).c_str(), nullptr);
}

ordered_json cmd_chsh(const StateSource& source, const std::string& method,
                      const OptimizeFlags& flags) {
  const LoadedState state = load_state(source, 2);
  ordered_json out;
  if (method == "closed") {
    const BellDiagonalSpectrum spectrum =
        state.spectrum ? BellDiagonalSpectrum::from_span(*state.spectrum)
                       : bell_diagonal_spectrum(state.rho);
    out["value"] = round9(chsh_max_bell_diagonal(spectrum));
    out["method"] = "closed";
  } else if (method == "optimize") {
    out = optimize_json(state.rho, chsh_family(), flags);
  } else {
    fail(ErrorCode::kParseError, "unknown method '" + method + "'");
  }
  add_mixedness(out, state.rho);
  out["concurrence"] = round9(concurrence(state.rho));
  return out;
}

ordered_json cmd_mermin(const StateSource& source, const std::string& method,
                        const OptimizeFlags& flags) {
  const LoadedState state = load_state(source, 3);
  ordered_json out;
  if (method == "optimize") {
    out = optimize_json(state.rho, mermin_family(), flags);
  } else if (method == "bound" || method == "angles") {
    const PairedSpectrum spectrum =
        state.spectrum ? PairedSpectrum::from_pairs(*state.spectrum, 3)
                       : ghz_diagonal_spectrum(state.rho);
    const DistillabilityReport report = classify(spectrum);
    if (method == "bound") {
      out["value"] = round9(report.mermin_value);
      out["method"] = "bound";
    } else {
      const MerminAngles angles = solve_mermin_angles(spectrum);
      out["value"] = round9(angles.value);
      out["method"] = "angles";
      out["bound"] = round9(report.mermin_value);
      out["ansatz_value"] = round9(angles.ansatz_value);
      out["phi"] = round9(angles.phi);
      out["psi"] = round9(angles.psi);
    }
    out["ppt"] = {report.ppt[0], report.ppt[1], report.ppt[2]};
    out["distillable"] = report.distillable;
    out["category"] = category_name(report.category);
  } else {
    fail(ErrorCode::kParseError, "unknown method '" + method + "'");
  }
  add_mixedness(out, state.rho);
  return out;
}

ordered_json cmd_mabk(const StateSource& source, const std::string& method,
                      const OptimizeFlags& flags) {
  const LoadedState state = load_state(source, 4);
  ordered_json out;
  if (method == "optimize") {
    out = optimize_json(state.rho, mabk4_family(), flags);
  } else if (method == "bound") {
    const PairedSpectrum spectrum =
        state.spectrum ? PairedSpectrum::from_pairs(*state.spectrum, 4)
                       : ghz_diagonal_spectrum(state.rho);
    out["value"] = round9(mabk_bound_diagonal(spectrum));
    out["method"] = "bound";
  } else {
    fail(ErrorCode::kParseError, "unknown method '" + method + "'");
  }
  add_mixedness(out, state.rho);
  return out;
}

CsvTable cmd_frontier(const std::string& family, double from, double to,
                      int steps) {
  check_steps(from, to, steps);
  CsvTable table{{"measure", "x", "b_max", "family_state"}, {}};
  for (int i = 0; i <= steps; ++i) {
    const double x = sweep_point(from, to, steps, i);
    FrontierPoint p;
    if (family == "chsh-R") {
      p = chsh_frontier_R(x);
    } else if (family == "chsh-lambda") {
      p = chsh_frontier_lambda_point(x);
    } else if (family == "mermin-R") {
      p = {FrontierMeasure::kParticipationRatio, x, mermin_frontier_R(x),
           FrontierTag::kWerner3};
    } else {
      fail(ErrorCode::kParseError, "unknown frontier family '" + family +
                                       "' (chsh-R, chsh-lambda, mermin-R)");
    }
    table.rows.push_back({frontier_measure_name(p.measure),
                          format_number(p.x), format_number(p.b_max),
                          frontier_tag_name(p.family_state)});
  }
  return table;
}

CsvTable cmd_mems(double from, double to, int steps) {
  check_steps(from, to, steps);
  CsvTable table{{"x", "g", "concurrence", "participation_ratio", "b_max"},
                 {}};
  for (int i = 0; i <= steps; ++i) {
    const double x = sweep_point(from, to, steps, i);
    const DensityMatrix rho = mems_state(x);
    table.rows.push_back({format_number(x), format_number(mems_g(x)),
                          format_number(concurrence(rho)),
                          format_number(mixedness(rho).participation_ratio),
                          format_number(chsh_max_mems(x))});
  }
  return table;
}

CsvTable cmd_mnms(const std::string& region, double from, double to,
                  int steps) {
  check_steps(from, to, steps);
  MnmsRegion r;
  if (region == "I") {
    r = MnmsRegion::kI;
  } else if (region == "II") {
    r = MnmsRegion::kII;
  } else {
    fail(ErrorCode::kParseError, "region must be I or II, got '" + region + "'");
  }
  CsvTable table{{"x", "region", "participation_ratio", "lambda_max",
                  "concurrence", "b_max"},
                 {}};
  for (int i = 0; i <= steps; ++i) {
    const double x = sweep_point(from, to, steps, i);
    const DensityMatrix rho = mnms_state(x, r);
    const MixednessScalars m = mixedness(rho);
    table.rows.push_back(
        {format_number(x), region, format_number(m.participation_ratio),
         format_number(m.max_eigenvalue), format_number(concurrence(rho)),
         format_number(
             chsh_max_bell_diagonal(bell_diagonal_spectrum(rho)))});
  }
  return table;
}

CsvTable cmd_werner3(double from, double to, int steps) {
  check_steps(from, to, steps);
  CsvTable table{{"x", "participation_ratio", "mermin_bound", "frontier",
                  "ppt_1", "ppt_2", "ppt_3", "category"},
                 {}};
  for (int i = 0; i <= steps; ++i) {
    const double x = sweep_point(from, to, steps, i);
    const PairedSpectrum s = werner3_spectrum(x);
    const DistillabilityReport report = classify(s);
    const double r = s.participation_ratio();
    table.rows.push_back({format_number(x), format_number(r),
                          format_number(report.mermin_value),
                          format_number(mermin_frontier_R(r)),
                          flag(report.ppt[0]), flag(report.ppt[1]),
                          flag(report.ppt[2]),
                          category_name(report.category)});
  }
  return table;
}

CsvTable cmd_ghz(int parties, double p_from, double p_to, int steps) {
  check_steps(p_from, p_to, steps);
  const double threshold = ghz_violation_threshold(parties);
  const double lvm = mabk_lvm_bound(parties);
  CsvTable table{{"n", "p", "sin2alpha", "leading_violation", "lvm_bound",
                  "violates"},
                 {}};
  for (int i = 0; i <= steps; ++i) {
    const GeneralizedGhz g(parties, sweep_point(p_from, p_to, steps, i));
    const double s2a = g.sin_2alpha();
    table.rows.push_back({std::to_string(parties), format_number(g.p()),
                          format_number(s2a),
                          format_number(ghz_violation_leading(g)),
                          format_number(lvm), flag(s2a > threshold)});
  }
  return table;
}

CsvTable cmd_chain(const std::string& csv_text, int sites) {
  CsvTable table = parse_csv(csv_text);
  if (sites == 2) {
    const std::vector<CorrelatorRow2> rows = parse_correlators2(csv_text);
    table.header.push_back("b_max");
    table.header.push_back("violates");
    for (size_t r = 0; r < rows.size(); ++r) {
      const double b = chsh_max_from_correlators(rows[r].tensor);
      table.rows[r].push_back(format_number(b));
      table.rows[r].push_back(flag(b > 2.0 + 1e-9));
    }
  } else if (sites == 3) {
    const std::vector<CorrelatorRow3> rows = parse_correlators3(csv_text);
    table.header.push_back("mermin_bound");
    table.header.push_back("violates");
    for (size_t r = 0; r < rows.size(); ++r) {
      const double b = mermin_bound_from_correlators(rows[r].tensor);
      table.rows[r].push_back(format_number(b));
      table.rows[r].push_back(flag(b > 2.0 + 1e-9));
    }
  } else {
    fail(ErrorCode::kOutOfRange,
         "sites must be 2 or 3, got " + std::to_string(sites));
  }
  return table;
}

SurveyFiles render_survey(const SurveyStats& stats,
                          const SurveyOptions& options) {
  static const DistillabilityCategory kOrder[4] = {
      DistillabilityCategory::kDistillableLocal,
      DistillabilityCategory::kDistillableNonlocal,
      DistillabilityCategory::kBoundLocal,
      DistillabilityCategory::kBoundNonlocal};
  CsvTable categories{{"category", "count", "probability"}, {}};
  ordered_json probs;
  for (DistillabilityCategory c : kOrder) {
    const int i = static_cast<int>(c);
    categories.rows.push_back({category_name(c),
                               std::to_string(stats.counts[i]),
                               format_number(stats.category_probs[i])});
    probs[category_name(c)] = round9(stats.category_probs[i]);
  }
  CsvTable histogram{{"bin_lo", "bin_hi", "density"}, {}};
  for (size_t b = 0; b < stats.density.size(); ++b) {
    histogram.rows.push_back({format_number(b * stats.bin_width),
                              format_number((b + 1) * stats.bin_width),
                              format_number(stats.density[b])});
  }
  ordered_json summary;
  summary["samples"] = stats.n_samples;
  summary["seed"] = stats.seed;
  summary["bins"] = options.bins;
  summary["chunk_size"] = options.chunk_size;
  summary["probabilities"] = probs;
  if (options.cross_check_ppt) {
    summary["ppt_checked"] = stats.ppt_checked;
    summary["ppt_mismatches"] = stats.ppt_mismatches;
  }
  return {to_csv(categories), to_csv(histogram), summary.dump(2) + "\n"};
}

void write_survey(const SurveyFiles& files, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    fail(ErrorCode::kIoError,
         "cannot create directory " + out_dir + ": " + ec.message());
  }
  const std::filesystem::path dir(out_dir);
  write_text_file((dir / "categories.csv").string(), files.categories_csv);
  write_text_file((dir / "histogram.csv").string(), files.histogram_csv);
  write_text_file((dir / "summary.json").string(), files.summary_json);
}

std::string render_table(const CsvTable& table, const std::string& format) {
  if (format == "csv") return to_csv(table);
  if (format != "json") {
    fail(ErrorCode::kParseError, "unknown format '" + format + "'");
  }
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json obj;
    for (size_t c = 0; c < table.header.size(); ++c) obj[table.header[c]] = row[c];
    rows.push_back(obj);
  }
  return rows.dump(2) + "\n";
}

std::string render_json(const ordered_json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  if (format != "csv") {
    fail(ErrorCode::kParseError, "unknown format '" + format + "'");
  }
  CsvTable table{{"key", "value"}, {}};
  for (const auto& [key, value] : j.items()) {
    std::string text = value.is_string() ? value.get<std::string>()
                                         : value.dump();
    std::replace(text.begin(), text.end(), ',', ';');
    table.rows.push_back({key, text});
  }
  return to_csv(table);
}

}  // namespace bellmax::cli
