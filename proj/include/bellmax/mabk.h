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

#ifndef BELLMAX_MABK_H_
#define BELLMAX_MABK_H_

#include <array>
#include <utility>

#include <Eigen/Dense>

#include "bellmax/bell_operators.h"
#include "bellmax/paired_spectrum.h"
#include "bellmax/qstate.h"

namespace bellmax {

// 2^((n+1)/2): quantum maximum of the n-party MABK operator.
double mabk_quantum_max(int parties);
// Local bound, B^QM / 2^((n-1)/2) = 2 for every n.
double mabk_lvm_bound(int parties);

// 4 sqrt2 sqrt(sum_j (l_j^+ - l_j^-)^2) for a four-qubit GHZ-diagonal
// spectrum, pairs as stored. WrongPartyCount unless parties() == 4.
//
// Bounds the maximum over equatorial settings only. Settings along z see
// the pair sums instead, reaching 2 |sum_j (-1)^popcount(j) (l_j^+ + l_j^-)|,
// which is larger for some spectra: (1/2, 1/2, 0, ...) scores 2 against a
// value of 0 here.
double mabk_bound_diagonal(const PairedSpectrum& spectrum);

// 2^((n+1)/2) sqrt(sum_j (l_j^+ - l_j^-)^2), n = spectrum.parties(), with
// the pairs taken as stored. At n = 2 and n = 3 this is the CHSH and
// Mermin formula.
double mabk_conjecture_bound(const PairedSpectrum& spectrum);

// sqrt(p)|0...0> + sqrt(1-p)|1...1> on n >= 2 qubits.
class GeneralizedGhz {
 public:
  // BadPartyCount for n < 2, OutOfRange for p outside [0, 1].
  GeneralizedGhz(int parties, double p);

  int parties() const { return parties_; }
  double p() const { return p_; }
  // cos alpha = sqrt(p).
  double alpha() const;
  double sin_2alpha() const;
  ComplexVector vector() const;

 private:
  int parties_;
  double p_;
};

// Weights on |Psi_0^+> and |Psi_0^->: 1/2 +- sqrt(p (1 - p)).
std::pair<double, double> ghz_bell_coeffs(const GeneralizedGhz& g);

// Leading-order MABK violation 2 B^QM sqrt(p (1 - p)) = B^QM sin 2alpha.
double ghz_violation_leading(const GeneralizedGhz& g);

// 1/sqrt(2^(n-1)): sin 2alpha above which the leading-order violation
// exceeds the local bound. BadPartyCount for n < 3.
double ghz_violation_threshold(int parties);

// The per-basis-state expectation of one four-body product
// (a.sigma)(x)(b.sigma)(x)(c.sigma)(x)(d.sigma) on |Psi_j^{sign}>,
// j in [0, 8), evaluated with the closed-form table
//   +-z_a z_b z_c z_d +- Re[a^{+-} b^{+-} c^{+-} d^{+-}],
// with v^{+-} = v_x +- i v_y.
double qs_product_expectation(int j, int sign,
                              const std::array<Eigen::Vector3d, 4>& v);

// Tr(rho B_MABK) for a GHZ-diagonal spectrum, summed from the table.
double mabk_diagonal_expectation(const PairedSpectrum& spectrum,
                                 const ObserverSettings& settings);

}  // namespace bellmax

#endif  // BELLMAX_MABK_H_
