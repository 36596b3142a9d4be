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

#ifndef BELLMAX_QSTATE_H_
#define BELLMAX_QSTATE_H_

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace bellmax {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Tolerance applied to every DensityMatrix invariant (Hermiticity, unit
// trace, positivity).
inline constexpr double kStateTolerance = 1e-10;

// Number of qubits of a 2^n-dimensional register. Throws DimensionMismatch
// when `dim` is not a power of two of at least 2.
int qubit_count(long dim);

// A validated qubit-register state: Hermitian, unit trace, positive
// semidefinite. Instances are immutable and only come out of make_density()
// and the helpers below, so every DensityMatrix in the program is physical.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  int num_qubits() const { return qubit_count(mat_.rows()); }

  // Ascending.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  friend DensityMatrix make_density(const ComplexMatrix& m);
  DensityMatrix(ComplexMatrix mat, Eigen::VectorXd eigenvalues)
      : mat_(std::move(mat)), eigenvalues_(std::move(eigenvalues)) {}

  ComplexMatrix mat_;
  Eigen::VectorXd eigenvalues_;
};

// Validates `m` and returns it as a state. Violations within
// kStateTolerance are repaired: the matrix is Hermitized, negative
// eigenvalues are clamped to zero and the trace renormalized.
//
// Errors: DimensionMismatch (not square / not 2^n), NotHermitian,
// NotUnitTrace, NotPSD. The message carries the offending magnitude.
DensityMatrix make_density(const ComplexMatrix& m);

// |psi><psi| for a normalized vector (NotNormalized otherwise).
DensityMatrix pure_state(const ComplexVector& psi);

DensityMatrix maximally_mixed(int dim);

enum class BasisKind { kComputational, kBell, kGhz };

// An orthonormal basis of a qubit register.
//
//  * computational(n): |0...0>, |0...01>, ..., party 1 is the most
//    significant bit of the index.
//  * bell(theta): |Phi+>, |Phi->, |Psi+>, |Psi->, with
//    |Phi+-> = (|00> +- e^{i theta}|11>)/sqrt2 and
//    |Psi+-> = (|01> +- e^{i theta}|10>)/sqrt2.
//  * ghz(n): |Psi_0^+>, |Psi_0^->, |Psi_1^+>, ... with
//    |Psi_j^+-> = (|j> +- |2^n - 1 - j>)/sqrt2, j < 2^(n-1).
//    ghz(2) coincides with bell(0).
class BasisSet {
 public:
  static BasisSet computational(int num_qubits);
  static BasisSet bell(double theta = 0.0);
  static BasisSet ghz(int parties);

  BasisKind kind() const { return kind_; }
  double theta() const { return theta_; }
  int parties() const { return parties_; }
  int dim() const { return static_cast<int>(vectors_.size()); }
  const std::vector<ComplexVector>& vectors() const { return vectors_; }

  // Unitary whose i-th row is <b_i|.
  ComplexMatrix to_basis() const;

 private:
  BasisSet(BasisKind kind, double theta, int parties,
           std::vector<ComplexVector> vectors)
      : kind_(kind), theta_(theta), parties_(parties),
        vectors_(std::move(vectors)) {}

  BasisKind kind_;
  double theta_;
  int parties_;
  std::vector<ComplexVector> vectors_;
};

// Expresses `rho` (given in the computational basis) in `basis`: U rho U^+.
DensityMatrix change_basis(const DensityMatrix& rho, const BasisSet& basis);

// Inverse of change_basis: takes coordinates in `basis` back to the
// computational basis.
DensityMatrix from_basis(const DensityMatrix& rho_in_basis,
                         const BasisSet& basis);

// sum_i weights[i] |b_i><b_i|, returned in the computational basis.
DensityMatrix diagonal_state(const BasisSet& basis,
                             std::span<const double> weights);

struct ParallelDecomposition {
  ComplexMatrix parallel;
  ComplexMatrix perpendicular;
};

// Splits a two-qubit state written in the Bell basis (theta = 0) into the
// part seen by every CHSH operator and the part no CHSH operator sees.
// `parallel` keeps the diagonal, the imaginary parts of the (1,2), (1,3),
// (2,4), (3,4) entries and the real parts of (1,4), (2,3) (1-based);
// `perpendicular` keeps the rest.
ParallelDecomposition parallel_decompose(const DensityMatrix& rho_bell);

struct MixednessScalars {
  double participation_ratio;
  double max_eigenvalue;
  double purity;
};

MixednessScalars mixedness(const DensityMatrix& rho);

// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

// Transpose on the tensor factor of `party` (0-based, 0 = most significant
// qubit). Throws BadPartyIndex.
ComplexMatrix partial_transpose(const DensityMatrix& rho, int party);

// Pauli matrix: 0 = I, 1 = X, 2 = Y, 3 = Z.
ComplexMatrix pauli(int index);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& m);

}  // namespace bellmax

#endif  // BELLMAX_QSTATE_H_
