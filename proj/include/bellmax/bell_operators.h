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

#ifndef BELLMAX_BELL_OPERATORS_H_
#define BELLMAX_BELL_OPERATORS_H_

#include <array>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bellmax/qstate.h"

namespace bellmax {

// A measurement direction on the Bloch sphere, kept both as spherical
// angles and as the unit vector (sin t cos p, sin t sin p, cos t).
struct Direction {
  double theta = 0.0;
  double phi = 0.0;
  Eigen::Vector3d vec = Eigen::Vector3d::UnitZ();

  static Direction from_angles(double theta, double phi);
  // Normalizes `v` (which must be nonzero) and derives the angles, with
  // theta in [0, pi] and phi in [0, 2 pi).
  static Direction from_vector(const Eigen::Vector3d& v);
};

// Two settings (a_j, b_j) per party. Choice index 0 selects a_j, 1 selects
// b_j.
class ObserverSettings {
 public:
  explicit ObserverSettings(std::vector<std::array<Direction, 2>> parties);

  // 4 angles per party: theta_a, phi_a, theta_b, phi_b.
  static ObserverSettings from_angles(std::span<const double> angles);
  static ObserverSettings from_vectors(
      const std::vector<std::array<Eigen::Vector3d, 2>>& vectors);

  int n_parties() const { return static_cast<int>(parties_.size()); }
  const Direction& direction(int party, int choice) const {
    return parties_[party][choice];
  }
  const Eigen::Vector3d& vector(int party, int choice) const {
    return parties_[party][choice].vec;
  }
  std::vector<double> angles() const;

 private:
  std::vector<std::array<Direction, 2>> parties_;
};

enum class BellKind { kChsh, kMermin, kMabk4, kMabkN };

struct BellFamily {
  BellKind kind;
  int n_parties;
  double lvm_bound;
  double quantum_max;

  std::string name() const;
};

BellFamily chsh_family();
BellFamily mermin_family();
// Four-party MABK operator, normalized so that the local bound is 2 and the
// quantum maximum 4 sqrt2.
BellFamily mabk4_family();
// Closed-form bounds only: local 2, quantum 2^((n+1)/2). No operator is
// built for this family.
BellFamily mabk_n_family(int n_parties);

// One signed product term of a Bell operator: coefficient times
// (x_1 . sigma) (x) ... (x) (x_n . sigma) where x_k is a_k when
// choices[k] == 0 and b_k otherwise.
struct BellTerm {
  double coefficient;
  std::vector<int> choices;
};

// Terms of CHSH, Mermin and MABK4. WrongPartyCount for MABK_N.
const std::vector<BellTerm>& bell_terms(const BellFamily& family);

ComplexMatrix spin_operator(const Eigen::Vector3d& direction);

ComplexMatrix bell_operator(const BellFamily& family,
                            const ObserverSettings& settings);
ComplexMatrix chsh_operator(const ObserverSettings& settings);
ComplexMatrix mermin_operator(const ObserverSettings& settings);
ComplexMatrix mabk_operator(const ObserverSettings& settings);

// Re Tr(rho B). DimensionMismatch on size mismatch; NotHermitian when the
// imaginary part of the trace exceeds 1e-10.
double expectation(const DensityMatrix& rho, const ComplexMatrix& op);

// T[c_1 ... c_n] = Tr(rho sigma_c1 (x) ... (x) sigma_cn), c in {x, y, z}.
// Every Bell operator here is a sum of full n-body products, so its
// expectation is a contraction of this tensor with the setting vectors.
class CorrelationTensor {
 public:
  static CorrelationTensor of(const DensityMatrix& rho);

  int n_parties() const { return n_; }
  // Flat index sum_k c_k 3^(n-1-k).
  const std::vector<double>& values() const { return values_; }
  double at(std::span<const int> components) const;

  // Contracts every index with `vectors[k]` except `keep` (pass -1 to
  // contract everything; the scalar lands in out[0]).
  void contract(std::span<const Eigen::Vector3d> vectors, int keep,
                double out[3]) const;

 private:
  CorrelationTensor(int n, std::vector<double> values)
      : n_(n), values_(std::move(values)) {}

  int n_;
  std::vector<double> values_;
};

double bell_value(const CorrelationTensor& tensor, const BellFamily& family,
                  const ObserverSettings& settings);

}  // namespace bellmax

#endif  // BELLMAX_BELL_OPERATORS_H_
