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

#ifndef BELLMAX_VIOLATION_OPTIMIZER_H_
#define BELLMAX_VIOLATION_OPTIMIZER_H_

#include <cstdint>

#include "bellmax/bell_operators.h"
#include "bellmax/qstate.h"

namespace bellmax {

struct OptimizerOptions {
  int starts = 0;  // 0 picks default_starts(family).
  std::uint64_t seed = 0xB311;
  int workers = 1;
  int max_sweeps = 2000;
  double tolerance = 1e-12;
};

struct OptimizationReport {
  double value;
  ObserverSettings settings;
  int starts;
  int best_start;
  double converged_fraction;
};

// 50 for CHSH, 200 for Mermin, 500 for MABK4.
int default_starts(const BellFamily& family);

// Multi-start local ascent of Tr(rho B(settings)) over all settings.
//
// Each start draws every angle uniformly (theta in [0, pi], phi in
// [0, 2 pi)) from stream_seed(seed, start). The objective is linear in each
// setting vector separately, so one coordinate step replaces a vector with
// its normalized gradient, the exact maximizer with the others held fixed.
// Sweeps repeat until the gain per sweep drops below `tolerance`.
//
// The best start wins, lowest index on ties, so the report does not depend
// on `workers`. converged_fraction counts starts within 1e-6 of the best.
//
// Errors: DimensionMismatch when rho does not have 2^n_parties rows,
// WrongPartyCount for families without an operator, OutOfRange for
// starts < 0 or workers < 1.
OptimizationReport maximize_violation(const DensityMatrix& rho,
                                      const BellFamily& family,
                                      const OptimizerOptions& options);

OptimizationReport maximize_violation(const DensityMatrix& rho,
                                      const BellFamily& family, int starts,
                                      std::uint64_t seed);

}  // namespace bellmax

#endif  // BELLMAX_VIOLATION_OPTIMIZER_H_
