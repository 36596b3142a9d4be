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

#include "bellmax/mabk.h"

#include <cmath>
#include <complex>
#include <string>

#include "bellmax/csv.h"
#include "bellmax/errors.h"

namespace bellmax {
namespace {

using cd = std::complex<double>;

struct QsRow {
  double z_sign;
  std::array<int, 4> conj;  // +1 selects v^+, -1 selects v^-
};

// One row per j in the order of the expectation table.
constexpr QsRow kQsTable[8] = {
    {+1.0, {+1, +1, +1, +1}}, {-1.0, {+1, +1, +1, -1}},
    {-1.0, {+1, +1, -1, +1}}, {+1.0, {+1, +1, -1, -1}},
    {-1.0, {-1, +1, -1, -1}}, {+1.0, {+1, -1, +1, -1}},
    {+1.0, {-1, +1, +1, -1}}, {-1.0, {-1, +1, +1, +1}},
};

}  // namespace

double mabk_quantum_max(int parties) {
  if (parties < 2) {
    fail(ErrorCode::kBadPartyCount,
         "MABK needs at least 2 parties, got " + std::to_string(parties));
  }
  return std::pow(2.0, (parties + 1) / 2.0);
}

double mabk_lvm_bound(int parties) {
  return mabk_quantum_max(parties) / std::pow(2.0, (parties - 1) / 2.0);
}

double mabk_bound_diagonal(const PairedSpectrum& spectrum) {
  if (spectrum.parties() != 4) {
    fail(ErrorCode::kWrongPartyCount,
         "MABK4 needs 4 parties, spectrum has " +
             std::to_string(spectrum.parties()));
  }
  return 4.0 * std::sqrt(2.0) * spectrum.difference_norm();
}

double mabk_conjecture_bound(const PairedSpectrum& spectrum) {
  return mabk_quantum_max(spectrum.parties()) * spectrum.difference_norm();
}

GeneralizedGhz::GeneralizedGhz(int parties, double p)
    : parties_(parties), p_(p) {
  if (parties < 2) {
    fail(ErrorCode::kBadPartyCount,
         "generalized GHZ needs at least 2 parties, got " +
             std::to_string(parties));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::kOutOfRange, "p must lie in [0, 1], got " +
                                     format_number(p));
  }
}

double GeneralizedGhz::alpha() const { return std::acos(std::sqrt(p_)); }

double GeneralizedGhz::sin_2alpha() const {
  return 2.0 * std::sqrt(p_ * (1.0 - p_));
}

ComplexVector GeneralizedGhz::vector() const {
  if (parties_ > 12) {
    fail(ErrorCode::kBadPartyCount, "state vectors are limited to 12 qubits");
  }
  const int dim = 1 << parties_;
  ComplexVector v = ComplexVector::Zero(dim);
  v(0) = std::sqrt(p_);
  v(dim - 1) = std::sqrt(1.0 - p_);
  return v;
}

std::pair<double, double> ghz_bell_coeffs(const GeneralizedGhz& g) {
  const double r = std::sqrt(g.p() * (1.0 - g.p()));
  return {0.5 + r, 0.5 - r};
}

double ghz_violation_leading(const GeneralizedGhz& g) {
  return 2.0 * mabk_quantum_max(g.parties()) *
         std::sqrt(g.p() * (1.0 - g.p()));
}

double ghz_violation_threshold(int parties) {
  if (parties < 3) {
    fail(ErrorCode::kBadPartyCount,
         "the leading-order threshold is defined for n >= 3, got " +
             std::to_string(parties));
  }
  return 1.0 / std::sqrt(std::pow(2.0, parties - 1));
}

double qs_product_expectation(int j, int sign,
                              const std::array<Eigen::Vector3d, 4>& v) {
  if (j < 0 || j >= 8 || (sign != 1 && sign != -1)) {
    fail(ErrorCode::kOutOfRange, "basis index must be j in [0, 8), sign +-1");
  }
  const QsRow& row = kQsTable[j];
  double z = 1.0;
  cd product = 1.0;
  for (int k = 0; k < 4; ++k) {
    z *= v[k].z();
    product *= cd(v[k].x(), row.conj[k] * v[k].y());
  }
  return row.z_sign * z + sign * product.real();
}

double mabk_diagonal_expectation(const PairedSpectrum& spectrum,
                                 const ObserverSettings& settings) {
  if (spectrum.parties() != 4 || settings.n_parties() != 4) {
    fail(ErrorCode::kWrongPartyCount, "MABK4 needs 4 parties");
  }
  double total = 0.0;
  for (const BellTerm& term : bell_terms(mabk4_family())) {
    std::array<Eigen::Vector3d, 4> v;
    for (int k = 0; k < 4; ++k) v[k] = settings.vector(k, term.choices[k]);
    for (int j = 0; j < 8; ++j) {
      total += term.coefficient *
               (spectrum.plus(j) * qs_product_expectation(j, +1, v) +
                spectrum.minus(j) * qs_product_expectation(j, -1, v));
    }
  }
  return total;
}

}  // namespace bellmax
