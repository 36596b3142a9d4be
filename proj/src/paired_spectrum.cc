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

#include "bellmax/paired_spectrum.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "bellmax/csv.h"
#include "bellmax/errors.h"

namespace bellmax {
namespace {

constexpr double kSumTolerance = 1e-12;

void validate(std::span<const double> values, int parties) {
  if (parties < 2 || parties > 12) {
    fail(ErrorCode::kBadPartyCount,
         "party count must lie in [2, 12], got " + std::to_string(parties));
  }
  const size_t expected = size_t{1} << parties;
  if (values.size() != expected) {
    fail(ErrorCode::kBadSpectrum,
         std::to_string(parties) + " parties need " +
             std::to_string(expected) + " eigenvalues, got " +
             std::to_string(values.size()));
  }
  double sum = 0.0;
  for (double v : values) {
    if (!(v >= -kSumTolerance && v <= 1.0 + kSumTolerance)) {
      fail(ErrorCode::kBadSpectrum,
           "eigenvalue " + format_number(v) + " outside [0, 1]");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    fail(ErrorCode::kBadSpectrum, "eigenvalues sum to " + format_number(sum));
  }
}

}  // namespace

PairedSpectrum PairedSpectrum::canonical(std::span<const double> values,
                                         int parties) {
  validate(values, parties);
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return PairedSpectrum(std::move(v), parties);
}

PairedSpectrum PairedSpectrum::from_pairs(std::span<const double> values,
                                          int parties) {
  validate(values, parties);
  return PairedSpectrum(std::vector<double>(values.begin(), values.end()),
                        parties);
}

bool PairedSpectrum::is_sorted() const {
  return std::is_sorted(values_.begin(), values_.end(), std::greater<>());
}

double PairedSpectrum::difference_norm() const {
  double s = 0.0;
  for (int j = 0; j < pair_count(); ++j) s += difference(j) * difference(j);
  return std::sqrt(s);
}

double PairedSpectrum::participation_ratio() const {
  double purity = 0.0;
  for (double v : values_) purity += v * v;
  return 1.0 / purity;
}

DensityMatrix PairedSpectrum::state() const {
  return diagonal_state(BasisSet::ghz(parties_), values_);
}

PairedSpectrum ghz_diagonal_spectrum(const DensityMatrix& rho,
                                     double tolerance) {
  const int n = rho.num_qubits();
  const ComplexMatrix m = change_basis(rho, BasisSet::ghz(n)).matrix();
  const ComplexMatrix off = m - ComplexMatrix(m.diagonal().asDiagonal());
  if (off.norm() > tolerance) {
    fail(ErrorCode::kNotBellDiagonal,
         "off-diagonal norm in the GHZ basis is " + format_number(off.norm()));
  }
  std::vector<double> v(m.rows());
  double sum = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    v[i] = std::max(0.0, m(i, i).real());
    sum += v[i];
  }
  for (double& x : v) x /= sum;
  return PairedSpectrum::from_pairs(v, n);
}

}  // namespace bellmax
