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

#ifndef BELLMAX_PAIRED_SPECTRUM_H_
#define BELLMAX_PAIRED_SPECTRUM_H_

#include <span>
#include <vector>

#include "bellmax/qstate.h"

namespace bellmax {

// Eigenvalues of an n-qubit state diagonal in the GHZ basis, grouped as
// 2^(n-1) pairs (l_j^+, l_j^-) on |Psi_j^+->. For n = 2 the pairs are
// (Phi+, Phi-) and (Psi+, Psi-).
class PairedSpectrum {
 public:
  // Sorts the 2^n values decreasingly and pairs consecutive entries, the
  // canonical form all closed-form bounds assume.
  static PairedSpectrum canonical(std::span<const double> values,
                                  int parties);
  // Uses values[2j], values[2j+1] as (l_j^+, l_j^-) without reordering.
  static PairedSpectrum from_pairs(std::span<const double> values,
                                   int parties);

  int parties() const { return parties_; }
  int pair_count() const { return static_cast<int>(values_.size() / 2); }
  double plus(int j) const { return values_[2 * j]; }
  double minus(int j) const { return values_[2 * j + 1]; }
  double difference(int j) const { return plus(j) - minus(j); }
  double pair_sum(int j) const { return plus(j) + minus(j); }

  // l_0^+, l_0^-, l_1^+, ...
  const std::vector<double>& values() const { return values_; }
  bool is_sorted() const;

  // sqrt(sum_j (l_j^+ - l_j^-)^2).
  double difference_norm() const;
  double participation_ratio() const;

  // The state in the computational basis.
  DensityMatrix state() const;

 private:
  PairedSpectrum(std::vector<double> values, int parties)
      : values_(std::move(values)), parties_(parties) {}

  std::vector<double> values_;
  int parties_;
};

// Reads the paired spectrum of a state diagonal in the GHZ basis.
// NotBellDiagonal when the off-diagonal norm exceeds `tolerance`.
PairedSpectrum ghz_diagonal_spectrum(const DensityMatrix& rho,
                                     double tolerance = 1e-8);

}  // namespace bellmax

#endif  // BELLMAX_PAIRED_SPECTRUM_H_
