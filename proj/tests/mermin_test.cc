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

#include "bellmax/mermin.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <gtest/gtest.h>

#include "bellmax/errors.h"
#include "bellmax/paired_spectrum.h"
#include "bellmax/violation_optimizer.h"
#include "test_util.h"

namespace bellmax {
namespace {

using testing::code_of;
using testing::Mat;
using testing::TestRng;

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

PairedSpectrum ghz_spectrum() {
  std::vector<double> v(8, 0.0);
  v[0] = 1.0;
  return PairedSpectrum::from_pairs(v, 3);
}

PairedSpectrum uniform_spectrum() {
  return PairedSpectrum::from_pairs(std::vector<double>(8, 0.125), 3);
}

TEST(PairedSpectrumTest, CanonicalSortsAndPairs) {
  const std::vector<double> v = {0.05, 0.3, 0.1, 0.2, 0.05, 0.1, 0.15, 0.05};
  const PairedSpectrum s = PairedSpectrum::canonical(v, 3);
  EXPECT_TRUE(s.is_sorted());
  EXPECT_DOUBLE_EQ(s.plus(0), 0.3);
  EXPECT_DOUBLE_EQ(s.minus(0), 0.2);
  EXPECT_DOUBLE_EQ(s.difference(1), 0.05);
  EXPECT_FALSE(PairedSpectrum::from_pairs(v, 3).is_sorted());
}

TEST(PairedSpectrumTest, StateIsGhzDiagonal) {
  TestRng rng(1);
  const auto w = testing::random_simplex(8, rng);
  const PairedSpectrum s = PairedSpectrum::from_pairs(w, 3);
  EXPECT_LT((s.state().matrix() - testing::ghz_diagonal(3, w))
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
  const PairedSpectrum back = ghz_diagonal_spectrum(s.state());
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(back.values()[i], w[i], 1e-12);
  EXPECT_NEAR(s.participation_ratio(),
              mixedness(s.state()).participation_ratio, 1e-12);
}

TEST(PairedSpectrumTest, Validation) {
  const std::vector<double> seven(7, 1.0 / 7);
  EXPECT_EQ(code_of([&] { PairedSpectrum::canonical(seven, 3); }),
            ErrorCode::kBadSpectrum);
  const std::vector<double> two = {0.5, 0.5};
  EXPECT_EQ(code_of([&] { PairedSpectrum::canonical(two, 1); }),
            ErrorCode::kBadPartyCount);
  const std::vector<double> negative = {1.1, -0.1, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(code_of([&] { PairedSpectrum::from_pairs(negative, 3); }),
            ErrorCode::kBadSpectrum);
  TestRng rng(2);
  EXPECT_EQ(code_of([&] {
              ghz_diagonal_spectrum(
                  make_density(testing::random_density(8, rng)));
            }),
            ErrorCode::kNotBellDiagonal);
}

TEST(MerminBoundTest, KnownValues) {
  EXPECT_NEAR(mermin_bound_diagonal(ghz_spectrum()), 4.0, 1e-15);
  EXPECT_NEAR(mermin_bound_diagonal(uniform_spectrum()), 0.0, 1e-15);
  EXPECT_NEAR(mermin_bound_diagonal(werner3_spectrum(0.5)), 2.0, 1e-15);
  const std::vector<double> four(4, 0.25);
  EXPECT_EQ(code_of([&] {
              mermin_bound_diagonal(PairedSpectrum::from_pairs(four, 2));
            }),
            ErrorCode::kWrongPartyCount);
}

TEST(MerminBoundTest, DominatesOptimizer) {
  TestRng rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    const auto w = sorted_desc(testing::random_simplex(8, rng));
    const PairedSpectrum s = PairedSpectrum::from_pairs(w, 3);
    const double opt =
        maximize_violation(s.state(), mermin_family(), 200, 0xB311).value;
    EXPECT_LE(opt, mermin_bound_diagonal(s) + 1e-9);
  }
}

TEST(MerminEquatorialTest, MatchesOperatorExpectation) {
  TestRng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = testing::random_simplex(8, rng);
    const Mat rho = testing::ghz_diagonal(3, w);
    std::array<double, 6> phases;
    for (double& p : phases) p = rng.uniform(0, 2 * std::numbers::pi);
    std::array<Eigen::Vector3d, 6> v;
    for (int i = 0; i < 6; ++i) {
      v[i] = Eigen::Vector3d(std::cos(phases[i]), std::sin(phases[i]), 0);
    }
    EXPECT_NEAR(mermin_equatorial_value(PairedSpectrum::from_pairs(w, 3), phases),
                testing::expect(rho, testing::mermin_matrix(v)), 1e-12);
  }
}

TEST(MerminAnglesTest, GhzReachesFour) {
  const MerminAngles a = solve_mermin_angles(ghz_spectrum());
  EXPECT_NEAR(a.value, 4.0, 1e-12);
  EXPECT_NEAR(a.ansatz_value, 4.0, 1e-12);
  EXPECT_NEAR(std::abs(std::sin(a.phi) * std::sin(a.psi)), 1.0, 1e-9);
}

TEST(MerminAnglesTest, SymmetricSpectrumReachesBound) {
  const std::vector<double> w = {0.2, 0.05, 0.2, 0.05, 0.2, 0.05, 0.2, 0.05};
  const PairedSpectrum s = PairedSpectrum::from_pairs(w, 3);
  EXPECT_NEAR(solve_mermin_angles(s).value, mermin_bound_diagonal(s), 1e-9);
}

TEST(MerminAnglesTest, UniformSpectrumIsZero) {
  const MerminAngles a = solve_mermin_angles(uniform_spectrum());
  EXPECT_EQ(a.value, 0.0);
}

TEST(MerminAnglesTest, ReportedPhasesReproduceValue) {
  TestRng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const PairedSpectrum s =
        PairedSpectrum::canonical(testing::random_simplex(8, rng), 3);
    const MerminAngles a = solve_mermin_angles(s);
    EXPECT_NEAR(mermin_equatorial_value(s, a.phases), a.value, 1e-12);
    EXPECT_LE(a.ansatz_value, a.value + 1e-9);
  }
}

TEST(MerminAnglesTest, MatchesSettingsOptimizer) {
  TestRng rng(6);
  for (int trial = 0; trial < 8; ++trial) {
    auto w = testing::random_simplex(8, rng);
    if (trial % 2 == 0) w = sorted_desc(w);
    const PairedSpectrum s = PairedSpectrum::from_pairs(w, 3);
    const double opt =
        maximize_violation(s.state(), mermin_family(), 200, 0xB311).value;
    EXPECT_NEAR(solve_mermin_angles(s).value, opt, 1e-6) << trial;
  }
}

TEST(MerminAnglesTest, BoundGapIsSmallOnSortedSpectra) {
  TestRng rng(7);
  int wide = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const PairedSpectrum s =
        PairedSpectrum::canonical(testing::random_simplex(8, rng), 3);
    const double bound = mermin_bound_diagonal(s);
    const double value = solve_mermin_angles(s).value;
    EXPECT_LE(value, bound + 1e-9);
    EXPECT_LT(bound - value, 0.02) << trial;
    if ((bound - value) / bound >= 0.05) ++wide;
  }
  // Rare spectra sit slightly above 5%, e.g. trial 477 at 5.4%.
  EXPECT_LE(wide, 5);
}

TEST(Werner3Test, Endpoints) {
  const DensityMatrix ghz = werner3(1.0);
  EXPECT_NEAR(mixedness(ghz).participation_ratio, 1.0, 1e-12);
  EXPECT_NEAR(mermin_bound_diagonal(werner3_spectrum(1.0)), 4.0, 1e-15);
  EXPECT_NEAR(mixedness(werner3(0.0)).participation_ratio, 8.0, 1e-12);
  EXPECT_NEAR(mermin_bound_diagonal(werner3_spectrum(0.0)), 0.0, 1e-15);
  EXPECT_NEAR(mixedness(werner3(0.5)).participation_ratio, 32.0 / 11.0, 1e-12);
  EXPECT_NEAR(mixedness(werner3(0.2)).participation_ratio, 6.25, 1e-12);
  EXPECT_EQ(code_of([] { werner3(-0.1); }), ErrorCode::kOutOfRange);
}

TEST(Werner3Test, MatchesExplicitMixture) {
  const double x = 0.37;
  const testing::Vec g = testing::ghz_vector(3, 0, 1);
  const Mat expected = x * g * g.adjoint() + (1 - x) * Mat::Identity(8, 8) / 8.0;
  EXPECT_LT((werner3(x).matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(MerminFrontierTest, KnownPoints) {
  EXPECT_NEAR(mermin_frontier_R(1.0), 4.0, 1e-15);
  EXPECT_NEAR(mermin_frontier_R(32.0 / 11.0), 2.0, 1e-12);
  EXPECT_NEAR(mermin_frontier_R(8.0), 0.0, 1e-15);
  EXPECT_EQ(code_of([] { mermin_frontier_R(9.0); }), ErrorCode::kOutOfRange);
}

TEST(MerminFrontierTest, Werner3LiesOnFrontier) {
  for (int i = 1; i <= 9; ++i) {
    const PairedSpectrum s = werner3_spectrum(i / 10.0);
    EXPECT_NEAR(mermin_bound_diagonal(s),
                mermin_frontier_R(s.participation_ratio()), 1e-9);
  }
}

TEST(MerminFrontierTest, DominatesSortedSpectra) {
  TestRng rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const PairedSpectrum s =
        PairedSpectrum::canonical(testing::random_simplex(8, rng), 3);
    EXPECT_LE(mermin_bound_diagonal(s),
              mermin_frontier_R(s.participation_ratio()) + 1e-6);
  }
}

TEST(MerminFrontierTest, UnsortedPairingCanExceedFrontier) {
  const PairedSpectrum s =
      PairedSpectrum::from_pairs(std::vector<double>{0.5, 0, 0.5, 0, 0, 0, 0, 0}, 3);
  EXPECT_NEAR(s.participation_ratio(), 2.0, 1e-15);
  EXPECT_NEAR(mermin_bound_diagonal(s), 2 * std::sqrt(2.0), 1e-15);
  EXPECT_GT(mermin_bound_diagonal(s), mermin_frontier_R(2.0));
}

TEST(CriticalRatiosTest, Values) {
  const CriticalRatios r = critical_ratios();
  EXPECT_DOUBLE_EQ(r.nonlocal, 32.0 / 11.0);
  EXPECT_DOUBLE_EQ(r.separable, 6.25);
  EXPECT_NEAR(mermin_frontier_R(r.nonlocal), 2.0, 1e-12);
}

TEST(PptFlagsTest, KnownSpectra) {
  EXPECT_EQ(ppt_flags(ghz_spectrum()), (std::array<bool, 3>{false, false, false}));
  EXPECT_EQ(ppt_flags(uniform_spectrum()), (std::array<bool, 3>{true, true, true}));
}

TEST(PptFlagsTest, MatchesExplicitPartialTranspose) {
  TestRng rng(9);
  int ppt_seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    auto w = testing::random_simplex(8, rng);
    if (trial % 2 == 0) w = sorted_desc(w);
    const PairedSpectrum s = PairedSpectrum::from_pairs(w, 3);
    const Mat rho = testing::ghz_diagonal(3, w);
    const auto flags = ppt_flags(s);
    for (int cut = 0; cut < 3; ++cut) {
      const double low =
          testing::lowest_eigenvalue(testing::flip_party(rho, 3, cut));
      if (std::abs(low) < 1e-9) continue;
      EXPECT_EQ(flags[cut], low > 0.0) << trial << " cut " << cut;
      ppt_seen += flags[cut];
    }
  }
  EXPECT_GT(ppt_seen, 100);
}

TEST(ClassifyTest, KnownCategories) {
  EXPECT_EQ(classify(ghz_spectrum()).category,
            DistillabilityCategory::kDistillableNonlocal);
  EXPECT_EQ(classify(uniform_spectrum()).category,
            DistillabilityCategory::kBoundLocal);
  const DistillabilityReport w = classify(werner3_spectrum(0.9));
  EXPECT_EQ(w.category, DistillabilityCategory::kDistillableNonlocal);
  EXPECT_NEAR(w.mermin_value, 3.6, 1e-12);
  EXPECT_TRUE(w.distillable);
  EXPECT_EQ(category_name(DistillabilityCategory::kBoundNonlocal),
            "bound_nonlocal");
}

TEST(ClassifyTest, Werner3SeparabilityThreshold) {
  EXPECT_FALSE(classify(werner3_spectrum(0.21)).ppt[0]);
  EXPECT_TRUE(classify(werner3_spectrum(0.19)).ppt[0]);
  EXPECT_EQ(classify(werner3_spectrum(0.3)).category,
            DistillabilityCategory::kDistillableLocal);
}

TEST(ClassifyTest, PptSortedSpectraNeverViolate) {
  TestRng rng(10);
  for (int trial = 0; trial < 100000; ++trial) {
    const PairedSpectrum s =
        PairedSpectrum::canonical(testing::random_simplex(8, rng), 3);
    const auto flags = ppt_flags(s);
    if (flags[0] || flags[1] || flags[2]) {
      ASSERT_LE(mermin_bound_diagonal(s), 2.0) << trial;
    }
  }
}

TEST(ClassifyTest, UnsortedPairingCanBeBoundAndNonlocal) {
  const std::vector<double> w = {0.5, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0};
  const DistillabilityReport r = classify(PairedSpectrum::from_pairs(w, 3));
  EXPECT_EQ(r.category, DistillabilityCategory::kBoundNonlocal);
  EXPECT_NEAR(r.mermin_value, 2 * std::sqrt(2.0), 1e-12);
}

}  // namespace
}  // namespace bellmax
