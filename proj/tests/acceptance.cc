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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "bellmax/bell_operators.h"
#include "bellmax/chsh.h"
#include "bellmax/csv.h"
#include "bellmax/mabk.h"
#include "bellmax/mermin.h"
#include "bellmax/paired_spectrum.h"
#include "bellmax/spin_chain.h"
#include "bellmax/survey.h"
#include "bellmax/violation_optimizer.h"
#include "commands.h"
#include "test_util.h"

namespace bellmax {
namespace {

using testing::kSqrt2;
using testing::TestRng;

// Pinned tolerances.
constexpr double kCeilingTol = 1e-8;
constexpr double kOptimizerTol = 1e-6;
constexpr double kExactTol = 1e-12;
constexpr double kConcurrenceTol = 1e-9;
constexpr double kMnmsTol = 1e-9;
constexpr double kFrontierTol = 1e-9;
constexpr double kQsTol = 1e-10;
constexpr double kSpinTol = 1e-9;
constexpr double kSurveyLocalTol = 0.02;
constexpr double kSurveyNonlocalTol = 0.005;

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

ObserverSettings random_settings(int parties, TestRng& rng) {
  std::vector<std::array<Eigen::Vector3d, 2>> v;
  for (int k = 0; k < parties; ++k) v.push_back({rng.unit_vector(), rng.unit_vector()});
  return ObserverSettings::from_vectors(v);
}

std::vector<double> sorted_simplex(int dim, TestRng& rng) {
  auto w = testing::random_simplex(dim, rng);
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

Outcome tsirelson_ceiling() {
  Outcome out;
  TestRng rng(101);
  const BellFamily families[3] = {chsh_family(), mermin_family(),
                                  mabk4_family()};
  for (const BellFamily& family : families) {
    const int dim = 1 << family.n_parties;
    double worst = -1e9;
    for (int i = 0; i < 10000; ++i) {
      const DensityMatrix rho =
          i % 2 == 0 ? make_density(testing::random_density(dim, rng))
                     : pure_state(testing::random_pure(dim, rng));
      const double v = expectation(
          rho, bell_operator(family, random_settings(family.n_parties, rng)));
      worst = std::max(worst, std::abs(v) - family.quantum_max);
    }
    out.check(worst <= kCeilingTol,
              family.name() + " exceeds ceiling by " + fmt(worst));
  }
  return out;
}

Outcome chsh_closed_form() {
  Outcome out;
  TestRng rng(102);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto w = testing::random_simplex(4, rng);
    const BellDiagonalSpectrum s({w[0], w[1], w[2], w[3]});
    const double opt =
        maximize_violation(s.state(), chsh_family(), 0, 0xB311).value;
    worst = std::max(worst, std::abs(opt - chsh_max_bell_diagonal(s)));
  }
  out.check(worst < kOptimizerTol, "max gap " + fmt(worst));
  return out;
}

Outcome frontiers() {
  Outcome out;
  const double left = 2.0 * std::sqrt(2.0 / 2.0);
  const double right = 4.0 * std::sqrt((4.0 - 2.0) / (4.0 * 2.0));
  out.check(chsh_frontier_R(2.0).b_max == 2.0, "frontier_R(2) != 2");
  out.check(left == 2.0 && right == 2.0, "branch values at R = 2 differ from 2");
  for (double x : {1.0 / 3.0, 0.5}) {
    const double gap =
        std::abs(chsh_frontier_lambda(std::nextafter(x, 0.0)) -
                 chsh_frontier_lambda(std::nextafter(x, 1.0)));
    out.check(gap < kExactTol, "lambda frontier jumps " + fmt(gap));
  }
  TestRng rng(103);
  double worst = -1e9;
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = make_density(testing::random_density(4, rng));
    const MixednessScalars m = mixedness(rho);
    const double opt = maximize_violation(rho, chsh_family(), 0, 0xB311).value;
    worst = std::max({worst, opt - chsh_frontier_R(m.participation_ratio).b_max,
                      opt - chsh_frontier_lambda(m.max_eigenvalue)});
  }
  out.check(worst <= kOptimizerTol, "state above frontier by " + fmt(worst));
  return out;
}

Outcome mems() {
  Outcome out;
  out.check(std::abs(chsh_max_mems(1 / std::sqrt(2.0)) - 2.0) <= kExactTol,
            "chsh_max_mems(1/sqrt2) != 2");
  double worst = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double x = i / 20.0;
    worst = std::max(worst, std::abs(concurrence(mems_state(x)) - x));
  }
  out.check(worst <= kConcurrenceTol, "concurrence gap " + fmt(worst));
  const double r = mixedness(mems_state(2.0 / 3.0)).participation_ratio;
  out.check(std::abs(r - 1.8) <= kConcurrenceTol, "R(2/3) = " + fmt(r));
  return out;
}

Outcome mnms() {
  Outcome out;
  double worst = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const DensityMatrix rho = mnms_state(0.05 * i, MnmsRegion::kI);
    const double c = concurrence(rho);
    const double b = chsh_max_bell_diagonal(bell_diagonal_spectrum(rho));
    worst = std::max(worst, std::abs(b - 2 * std::sqrt(1 + c * c)));
  }
  out.check(worst <= kMnmsTol, "B vs 2 sqrt(1 + C^2) gap " + fmt(worst));
  for (int i = 1; i < 100; ++i) {
    const double c = i / 100.0;
    if (!(chsh_max_mems(c) < 2 * std::sqrt(1 + c * c))) {
      out.check(false, "MEMS not below MNMS at C = " + fmt(c));
      break;
    }
  }
  return out;
}

Eigen::Matrix4d random_orthogonal(TestRng& rng) {
  Eigen::Matrix4d g;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) g(i, j) = rng.normal();
  }
  return Eigen::HouseholderQR<Eigen::Matrix4d>(g).householderQ();
}

Outcome pure_superpositions() {
  Outcome out;
  TestRng rng(106);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Eigen::Vector4d c(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    c.normalize();
    const PureSuperposition psi({c(0), c(1), c(2), c(3)});
    const double b = chsh_max_pure(psi);
    worst = std::max(worst, std::abs(b * b - 4 * pure_concurrence_sq(psi) - 4));
  }
  out.check(worst <= kExactTol, "B^2 - 4C^2 - 4 up to " + fmt(worst));

  int violations = 0;
  double deepest = 0.0;
  for (int f = 0; f < 100; ++f) {
    const int m = 2 + f % 3;
    const Eigen::Matrix4d q = random_orthogonal(rng);
    std::vector<PureSuperposition> states;
    std::vector<double> alpha;
    double norm = 0.0;
    for (int k = 0; k < m; ++k) {
      states.emplace_back(std::array<double, 4>{q(0, k), q(1, k), q(2, k), q(3, k)});
      alpha.push_back(rng.normal());
      norm += alpha.back() * alpha.back();
    }
    for (double& a : alpha) a /= std::sqrt(norm);
    const Theorem1Result r = theorem1_lower_bound(states, alpha);
    if (!r.holds) {
      ++violations;
      deepest = std::max(deepest, r.bound - r.actual);
    }
  }
  out.check(violations == 0, "lower bound violated by " +
                                 std::to_string(violations) +
                                 "/100 families (largest shortfall " +
                                 fmt(deepest) + ")");
  return out;
}

Outcome mermin() {
  Outcome out;
  const std::vector<double> ghz = {1, 0, 0, 0, 0, 0, 0, 0};
  out.check(std::abs(mermin_bound_diagonal(PairedSpectrum::from_pairs(ghz, 3)) -
                     4.0) <= kExactTol,
            "GHZ bound != 4");
  TestRng rng(107);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const PairedSpectrum s =
        PairedSpectrum::canonical(testing::random_simplex(8, rng), 3);
    const double angle = solve_mermin_angles(s).value;
    const double opt =
        maximize_violation(s.state(), mermin_family(), 0, 0xB311).value;
    worst = std::max(worst, std::abs(angle - opt));
  }
  out.check(worst < kOptimizerTol, "angle solve vs optimizer gap " + fmt(worst));
  double frontier_gap = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const PairedSpectrum s = werner3_spectrum(i / 100.0);
    frontier_gap = std::max(frontier_gap,
                            std::abs(mermin_bound_diagonal(s) -
                                     mermin_frontier_R(s.participation_ratio())));
  }
  out.check(frontier_gap <= kFrontierTol, "werner3 off frontier by " + fmt(frontier_gap));
  out.check(std::abs(mermin_frontier_R(32.0 / 11.0) - 2.0) <= kExactTol,
            "frontier(32/11) != 2");
  const double r = mixedness(werner3(0.2)).participation_ratio;
  out.check(std::abs(r - 6.25) <= kExactTol, "R(werner3(0.2)) = " + fmt(r));
  return out;
}

Outcome survey_shares() {
  Outcome out;
  SurveyOptions options;
  options.samples = 1000000;
  options.cross_check_ppt = true;
  const SurveyStats s = survey(options);
  const auto p = [&](DistillabilityCategory c) {
    return s.category_probs[static_cast<int>(c)];
  };
  const double dl = p(DistillabilityCategory::kDistillableLocal);
  const double dn = p(DistillabilityCategory::kDistillableNonlocal);
  const double bl = p(DistillabilityCategory::kBoundLocal);
  out.check(std::abs(dl - 0.293) <= kSurveyLocalTol, "distillable_local " + fmt(dl));
  out.check(std::abs(dn - 0.008) <= kSurveyNonlocalTol,
            "distillable_nonlocal " + fmt(dn));
  out.check(std::abs(bl - 0.698) <= kSurveyLocalTol, "bound_local " + fmt(bl));
  out.check(s.counts[static_cast<int>(DistillabilityCategory::kBoundNonlocal)] == 0,
            "bound_nonlocal samples present");
  out.check(s.ppt_mismatches == 0 && s.ppt_checked > 0,
            std::to_string(s.ppt_mismatches) + " PPT mismatches");
  out.detail += (out.detail.empty() ? "" : "; ") + std::string("P = ") +
                fmt(dl) + "/" + fmt(dn) + "/" + fmt(bl) + ", " +
                std::to_string(s.ppt_checked) + " PPT samples cross-checked";
  return out;
}

Outcome mabk() {
  Outcome out;
  std::vector<double> ghz4(16, 0.0);
  ghz4[0] = 1.0;
  out.check(std::abs(mabk_bound_diagonal(PairedSpectrum::from_pairs(ghz4, 4)) -
                     4 * kSqrt2) <= kExactTol,
            "GHZ4 bound != 4 sqrt2");
  TestRng rng(109);
  double reduction = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto l = sorted_simplex(4, rng);
    const std::vector<double> paired = {l[0], l[3], l[1], l[2]};
    reduction = std::max(
        reduction,
        std::abs(mabk_conjecture_bound(PairedSpectrum::from_pairs(paired, 2)) -
                 chsh_max_bell_diagonal(BellDiagonalSpectrum({l[0], l[1], l[2], l[3]}))));
    const PairedSpectrum s3 =
        PairedSpectrum::canonical(testing::random_simplex(8, rng), 3);
    reduction = std::max(reduction, std::abs(mabk_conjecture_bound(s3) -
                                             mermin_bound_diagonal(s3)));
  }
  out.check(reduction <= kExactTol, "conjecture reduction gap " + fmt(reduction));

  double qs = 0.0;
  for (int t = 0; t < 50; ++t) {
    std::array<Eigen::Vector3d, 4> v;
    testing::Mat op = testing::Mat::Identity(1, 1);
    for (int k = 0; k < 4; ++k) {
      v[k] = rng.unit_vector();
      op = testing::tensor(op, testing::spin(v[k]));
    }
    for (int j = 0; j < 8; ++j) {
      for (int sign : {1, -1}) {
        const testing::Vec g = testing::ghz_vector(4, j, sign);
        qs = std::max(qs, std::abs(qs_product_expectation(j, sign, v) -
                                   (g.adjoint() * op * g)(0, 0).real()));
      }
    }
  }
  out.check(qs <= kQsTol, "Qs table gap " + fmt(qs));

  double excess = -1e9;
  int above = 0;
  int above_z = 0;
  for (int i = 0; i < 200; ++i) {
    const PairedSpectrum s =
        PairedSpectrum::canonical(testing::random_simplex(16, rng), 4);
    const double opt = maximize_violation(s.state(), mabk4_family(), 20, 0xB311).value;
    const double bound = mabk_bound_diagonal(s);
    double z_sum = 0.0;
    for (int j = 0; j < 8; ++j) {
      z_sum += (std::popcount(static_cast<unsigned>(j)) % 2 ? -1 : 1) * s.pair_sum(j);
    }
    if (opt > bound + kOptimizerTol) ++above;
    if (opt > std::max(bound, 2 * std::abs(z_sum)) + kOptimizerTol) ++above_z;
    excess = std::max(excess, opt - bound);
  }
  out.check(above == 0, "optimizer above bound on " + std::to_string(above) +
                            "/200 spectra by up to " + fmt(excess) + ", " +
                            std::to_string(above_z) +
                            " above max(bound, all-z value)");
  return out;
}

Outcome ghz_thresholds() {
  Outcome out;
  out.check(std::abs(ghz_violation_threshold(3) - 0.5) <= kExactTol, "n = 3 threshold");
  out.check(std::abs(ghz_violation_threshold(4) - 1 / std::sqrt(8.0)) <= kExactTol,
            "n = 4 threshold");
  for (int n = 3; n <= 10; ++n) {
    const double lead = ghz_violation_leading(GeneralizedGhz(n, 0.5));
    out.check(std::abs(lead - std::pow(2.0, (n + 1) / 2.0)) <= kExactTol,
              "leading violation at n = " + std::to_string(n));
    const double t = ghz_violation_threshold(n);
    const double p = (1 - std::sqrt(1 - t * t)) / 2;
    out.check(std::abs(ghz_violation_leading(GeneralizedGhz(n, p)) -
                       mabk_lvm_bound(n)) <= kExactTol,
              "flip point at n = " + std::to_string(n));
  }
  return out;
}

Outcome spin_chain() {
  Outcome out;
  out.check(std::abs(chsh_max_from_correlators({-1, -1, -1, 0}) - 2 * kSqrt2) <=
                kExactTol,
            "singlet != 2 sqrt2");
  const auto rows = parse_correlators2(
      read_text_file(std::string(BELLMAX_FIXTURE_DIR) + "/xy_chain_2site.csv"));
  double worst = -1e9;
  for (const auto& row : rows) {
    worst = std::max(worst, chsh_max_from_correlators(row.tensor));
  }
  out.check(!rows.empty() && worst <= 2.0 + kSpinTol,
            "fixture b_max up to " + fmt(worst));
  TestRng rng(111);
  double trip = 0.0;
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = make_density(testing::random_density(8, rng));
    const CorrelatorTensor3 t = correlators_from_state3(rho);
    trip = std::max(trip, (state_from_correlators3(t).matrix() - rho.matrix())
                              .cwiseAbs()
                              .maxCoeff());
    const CorrelatorTensor2 t2 = correlators_from_state2(
        state_from_correlators2({0.3 * rng.uniform(-1, 1), 0.3 * rng.uniform(-1, 1),
                                 0.3 * rng.uniform(-1, 1), 0.1 * rng.uniform(-1, 1)}));
    const CorrelatorTensor2 back =
        correlators_from_state2(state_from_correlators2(t2));
    trip = std::max({trip, std::abs(back.t_xx - t2.t_xx), std::abs(back.t_yy - t2.t_yy),
                     std::abs(back.t_zz - t2.t_zz), std::abs(back.t_xy - t2.t_xy)});
  }
  out.check(trip <= kExactTol, "round-trip error " + fmt(trip));
  out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(rows.size()) +
                " fixture rows";
  return out;
}

Outcome determinism() {
  Outcome out;
  SurveyOptions options;
  options.samples = 200000;
  options.cross_check_ppt = true;
  const auto render = [&](int workers) {
    SurveyOptions o = options;
    o.workers = workers;
    const cli::SurveyFiles f = cli::render_survey(survey(o), o);
    return f.categories_csv + f.histogram_csv + f.summary_json;
  };
  const std::string first = render(1);
  out.check(first == render(1), "two runs differ");
  out.check(first == render(8), "1 vs 8 workers differ");
  return out;
}

}  // namespace
}  // namespace bellmax

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    const char* name;
    std::function<bellmax::Outcome()> run;
  };
  const Criterion criteria[] = {
      {"tsirelson ceiling", bellmax::tsirelson_ceiling},
      {"chsh closed form vs optimizer", bellmax::chsh_closed_form},
      {"frontier reproduction", bellmax::frontiers},
      {"mems", bellmax::mems},
      {"mnms relation", bellmax::mnms},
      {"pure superpositions", bellmax::pure_superpositions},
      {"mermin", bellmax::mermin},
      {"distillability survey", bellmax::survey_shares},
      {"mabk", bellmax::mabk},
      {"ghz thresholds", bellmax::ghz_thresholds},
      {"spin chain", bellmax::spin_chain},
      {"determinism", bellmax::determinism},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = Clock::now();
    bellmax::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (!outcome.pass) ++failures;
    std::printf("%s %2d %s (%.1fs)%s%s\n", outcome.pass ? "PASS" : "FAIL", index,
                c.name, seconds, outcome.detail.empty() ? "" : ": ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
