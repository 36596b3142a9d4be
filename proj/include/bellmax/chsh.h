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

#ifndef BELLMAX_CHSH_H_
#define BELLMAX_CHSH_H_

#include <array>
#include <span>
#include <string>
#include <vector>

#include "bellmax/qstate.h"

namespace bellmax {

// Eigenvalues of a Bell-diagonal two-qubit state, in Bell-basis order
// (Phi+, Phi-, Psi+, Psi-). Each lies in [0, 1] and they sum to 1 within
// 1e-12 (BadSpectrum otherwise).
class BellDiagonalSpectrum {
 public:
  explicit BellDiagonalSpectrum(std::array<double, 4> lambdas);
  static BellDiagonalSpectrum from_span(std::span<const double> lambdas);

  const std::array<double, 4>& lambdas() const { return lambdas_; }
  // Decreasing order.
  std::array<double, 4> sorted() const;

  DensityMatrix state() const;

 private:
  std::array<double, 4> lambdas_;
};

// Reads the spectrum of a state that is diagonal in the Bell basis.
// NotBellDiagonal when the off-diagonal Frobenius norm in the Bell basis
// exceeds `tolerance`.
BellDiagonalSpectrum bell_diagonal_spectrum(const DensityMatrix& rho,
                                            double tolerance = 1e-8);

// c_1 |Phi+> + c_2 |Phi-> + c_3 |Psi+> + c_4 |Psi-> with real c_i.
class PureSuperposition {
 public:
  // NotNormalized unless sum c_i^2 = 1 within 1e-12.
  explicit PureSuperposition(std::array<double, 4> coeffs);

  // Bell coefficients of a two-qubit state vector. A global phase is
  // removed first; coefficients that stay complex are rejected with
  // OutOfRange, since only the real case has a closed form.
  static PureSuperposition from_vector(const ComplexVector& psi);

  const std::array<double, 4>& coeffs() const { return coeffs_; }
  std::array<double, 4> weights() const;  // c_i^2
  ComplexVector vector() const;            // computational basis
  DensityMatrix state() const;

 private:
  std::array<double, 4> coeffs_;
};

enum class FrontierMeasure { kParticipationRatio, kMaxEigenvalue };

// State family attaining a frontier point. rho_I = diag(1-x, x, 0, 0) and
// rho_II = diag(x, x, (1-2x)/2, (1-2x)/2) in the Bell basis. Below
// lambda_max = 1/2 the lambda frontier is attained by
// (l, l, 1-2l, 0) ("lambda_mid", l in [1/3, 1/2]) and
// (l, l, l, 1-3l) ("lambda_low", l in [1/4, 1/3]).
enum class FrontierTag { kRhoI, kRhoII, kLambdaMid, kLambdaLow, kWerner3 };

std::string frontier_measure_name(FrontierMeasure measure);
std::string frontier_tag_name(FrontierTag tag);

struct FrontierPoint {
  FrontierMeasure measure;
  double x;
  double b_max;
  FrontierTag family_state;
};

// 2 sqrt2 sqrt((l1 - l4)^2 + (l2 - l3)^2) on the decreasingly sorted
// spectrum, which makes the result permutation invariant.
double chsh_max_bell_diagonal(const BellDiagonalSpectrum& spectrum);

// Largest CHSH value at participation ratio R in [1, 4] (OutOfRange).
FrontierPoint chsh_frontier_R(double participation_ratio);

// Largest CHSH value at maximum eigenvalue in [1/4, 1] (OutOfRange).
double chsh_frontier_lambda(double lambda_max);
FrontierPoint chsh_frontier_lambda_point(double lambda_max);

enum class MnmsRegion { kI, kII };

// rho_I(x), x in [0, 1/2], or rho_II(x), x in [0, 1/4], in the
// computational basis. OutOfRange outside those intervals.
DensityMatrix mnms_state(double x, MnmsRegion region);

// g(x) = 1/3 for x <= 2/3 and x/2 above.
double mems_g(double x);

// The MEMS family with concurrence x in [0, 1], computational basis:
// g on |00><00| and |11><11|, 1 - 2g on |01><01|, x/2 coherence between
// |00> and |11>.
DensityMatrix mems_state(double x);

// (2/3) sqrt(1 + 9x^2) for x <= 1/3, 2 sqrt2 x above.
double chsh_max_mems(double x);

// 2 sqrt2 sqrt((l1 + l4)^2 + (l2 + l3)^2) with l_i = c_i^2.
double chsh_max_pure(const PureSuperposition& psi);

// 1 - 4 (l1 + l4)(l2 + l3).
double pure_concurrence_sq(const PureSuperposition& psi);

// CHSH maximum of alpha|01> + sqrt(1 - alpha^2)|Phi+>, alpha in [0, 1].
double superposition_example_theta(double alpha);

struct Theorem1Result {
  double bound;        // sqrt(sum alpha_i^4 B_i^2)
  double actual;       // B of sum alpha_i phi_i
  double cross_terms;  // actual^2 - bound^2
  bool holds;          // actual >= bound - 1e-10
};

// Compares the CHSH maximum of sum alpha_i phi_i with the quartic lower
// bound built from the constituents. Errors: NotOrthogonal (overlap above
// 1e-10), NotNormalized (sum alpha_i^2 != 1), DimensionMismatch (sizes).
//
// The bound is not a theorem: it fails whenever the cross terms are
// negative enough, e.g. for two rotated Phi+/Phi- combinations summing to
// |00>. `holds` reports which case occurred.
Theorem1Result theorem1_lower_bound(std::span<const PureSuperposition> states,
                                    std::span<const double> alpha);

// p |Psi-><Psi-| + (1 - p) I/4, p in [0, 1].
DensityMatrix werner2(double p);

}  // namespace bellmax

#endif  // BELLMAX_CHSH_H_
