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

#ifndef BELLMAX_MERMIN_H_
#define BELLMAX_MERMIN_H_

#include <array>
#include <string>

#include "bellmax/paired_spectrum.h"
#include "bellmax/qstate.h"

namespace bellmax {

// 4 sqrt(sum_j (l_j^+ - l_j^-)^2) for a three-qubit GHZ-diagonal spectrum,
// pairs as stored. WrongPartyCount unless parties() == 3.
double mermin_bound_diagonal(const PairedSpectrum& spectrum);

struct MerminAngles {
  // Stationary point of the two-angle reduction
  //   4 (d0 sin phi sin psi + d1 sin phi cos psi
  //      + d2 cos phi cos psi + d3 cos phi sin psi),  d_j = l_j^+ - l_j^-,
  // and its value. This reduction is not exhaustive.
  double phi;
  double psi;
  double ansatz_value;
  // Exact Mermin maximum of the state: the maximum over the six
  // equatorial setting phases, which is where the optimum lies for
  // GHZ-diagonal states.
  double value;
  // Azimuths of a_1, b_1, a_2, b_2, a_3, b_3 at the maximum.
  std::array<double, 6> phases;
  // True when the tangent iteration did not settle and the grid search
  // produced (phi, psi).
  bool used_fallback;
};

MerminAngles solve_mermin_angles(const PairedSpectrum& spectrum);

// Mermin value of a GHZ-diagonal state for equatorial settings with the
// given azimuths (a_1, b_1, a_2, b_2, a_3, b_3).
double mermin_equatorial_value(const PairedSpectrum& spectrum,
                               const std::array<double, 6>& phases);

// x |GHZ><GHZ| + (1 - x) I/8, x in [0, 1].
DensityMatrix werner3(double x);
PairedSpectrum werner3_spectrum(double x);

// 4 sqrt((8 - R) / (7 R)) for R in [1, 8].
double mermin_frontier_R(double participation_ratio);

struct CriticalRatios {
  double nonlocal;   // 32/11: frontier crosses the local bound
  double separable;  // 25/4: Werner-3 separability threshold x = 1/5
};

CriticalRatios critical_ratios();

// PPT flags of the three single-party cuts (party 1, 2, 3 transposed).
// For each pair j the partially transposed block mixing pair j with pair
// p(j) is positive iff l_p^+ + l_p^- >= |l_j^+ - l_j^-|; the partners are
// 0-3, 1-2 (cut 1), 0-2, 1-3 (cut 2) and 0-1, 2-3 (cut 3).
std::array<bool, 3> ppt_flags(const PairedSpectrum& spectrum);

enum class DistillabilityCategory {
  kDistillableLocal,
  kDistillableNonlocal,
  kBoundLocal,
  kBoundNonlocal,
};

std::string category_name(DistillabilityCategory category);

struct DistillabilityReport {
  std::array<bool, 3> ppt;
  bool distillable;  // no cut is PPT
  double mermin_value;
  DistillabilityCategory category;
};

// Classifies by (distillable, mermin_bound_diagonal > 2). For sorted
// spectra a PPT cut caps the bound at 2; a violation of that rule throws
// std::logic_error.
DistillabilityReport classify(const PairedSpectrum& spectrum);

}  // namespace bellmax

#endif  // BELLMAX_MERMIN_H_
