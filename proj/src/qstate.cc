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

#include "bellmax/qstate.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "bellmax/errors.h"

namespace bellmax {
namespace {

using cd = std::complex<double>;

std::string magnitude(double value) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << value;
  return os.str();
}

}  // namespace

int qubit_count(long dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    fail(ErrorCode::kDimensionMismatch,
         "dimension " + std::to_string(dim) + " is not 2^n with n >= 1");
  }
  int n = 0;
  while ((1L << n) < dim) ++n;
  return n;
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& m) {
  return hermitian_eigenvalues(m).minCoeff();
}

DensityMatrix make_density(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    fail(ErrorCode::kDimensionMismatch,
         "matrix is " + std::to_string(m.rows()) + "x" +
             std::to_string(m.cols()) + ", expected square");
  }
  qubit_count(m.rows());

  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kStateTolerance) {
    fail(ErrorCode::kNotHermitian,
         "max |M - M^+| = " + magnitude(asym) + " exceeds 1e-10");
  }
  ComplexMatrix h = 0.5 * (m + m.adjoint());

  const double trace = h.trace().real();
  if (std::abs(trace - 1.0) > kStateTolerance) {
    fail(ErrorCode::kNotUnitTrace,
         "|Tr - 1| = " + magnitude(std::abs(trace - 1.0)) + " exceeds 1e-10");
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  Eigen::VectorXd eig = solver.eigenvalues();
  if (eig.minCoeff() < -kStateTolerance) {
    fail(ErrorCode::kNotPsd,
         "min eigenvalue " + magnitude(eig.minCoeff()) + " below -1e-10");
  }

  if (eig.minCoeff() < 0.0) {
    eig = eig.cwiseMax(0.0);
    eig /= eig.sum();
    const ComplexMatrix& v = solver.eigenvectors();
    h = v * eig.cast<cd>().asDiagonal() * v.adjoint();
    h = 0.5 * (h + h.adjoint()).eval();
  } else if (trace != 1.0) {
    h /= trace;
    eig /= trace;
  }
  return DensityMatrix(std::move(h), std::move(eig));
}

DensityMatrix pure_state(const ComplexVector& psi) {
  const double norm = psi.squaredNorm();
  if (std::abs(norm - 1.0) > kStateTolerance) {
    fail(ErrorCode::kNotNormalized,
         "|psi|^2 = " + std::to_string(norm) + ", expected 1");
  }
  return make_density(psi * psi.adjoint());
}

DensityMatrix maximally_mixed(int dim) {
  return make_density(ComplexMatrix::Identity(dim, dim) / double(dim));
}

BasisSet BasisSet::computational(int num_qubits) {
  const int dim = 1 << num_qubits;
  std::vector<ComplexVector> vectors;
  for (int i = 0; i < dim; ++i) {
    ComplexVector v = ComplexVector::Zero(dim);
    v[i] = 1.0;
    vectors.push_back(std::move(v));
  }
  return BasisSet(BasisKind::kComputational, 0.0, num_qubits,
                  std::move(vectors));
}

BasisSet BasisSet::bell(double theta) {
  const double s = 1.0 / std::sqrt(2.0);
  const cd phase = std::polar(1.0, theta);
  std::vector<ComplexVector> vectors;
  for (int pair = 0; pair < 2; ++pair) {
    // pair 0: |00>,|11> (Phi); pair 1: |01>,|10> (Psi)
    const int lo = pair == 0 ? 0 : 1;
    const int hi = pair == 0 ? 3 : 2;
    for (double sign : {1.0, -1.0}) {
      ComplexVector v = ComplexVector::Zero(4);
      v[lo] = s;
      v[hi] = sign * s * phase;
      vectors.push_back(std::move(v));
    }
  }
  return BasisSet(BasisKind::kBell, theta, 2, std::move(vectors));
}

BasisSet BasisSet::ghz(int parties) {
  if (parties < 2) {
    fail(ErrorCode::kBadPartyCount, "GHZ basis needs at least 2 parties");
  }
  const int dim = 1 << parties;
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<ComplexVector> vectors;
  for (int j = 0; j < dim / 2; ++j) {
    for (double sign : {1.0, -1.0}) {
      ComplexVector v = ComplexVector::Zero(dim);
      v[j] = s;
      v[dim - 1 - j] = sign * s;
      vectors.push_back(std::move(v));
    }
  }
  return BasisSet(BasisKind::kGhz, 0.0, parties, std::move(vectors));
}

ComplexMatrix BasisSet::to_basis() const {
  const int d = dim();
  ComplexMatrix u(d, d);
  for (int i = 0; i < d; ++i) u.row(i) = vectors_[i].adjoint();
  return u;
}

DensityMatrix change_basis(const DensityMatrix& rho, const BasisSet& basis) {
  if (rho.dim() != basis.dim()) {
    fail(ErrorCode::kDimensionMismatch,
         "state dim " + std::to_string(rho.dim()) + " vs basis dim " +
             std::to_string(basis.dim()));
  }
  const ComplexMatrix u = basis.to_basis();
  return make_density(u * rho.matrix() * u.adjoint());
}

DensityMatrix from_basis(const DensityMatrix& rho_in_basis,
                         const BasisSet& basis) {
  if (rho_in_basis.dim() != basis.dim()) {
    fail(ErrorCode::kDimensionMismatch,
         "state dim " + std::to_string(rho_in_basis.dim()) +
             " vs basis dim " + std::to_string(basis.dim()));
  }
  const ComplexMatrix u = basis.to_basis();
  return make_density(u.adjoint() * rho_in_basis.matrix() * u);
}

DensityMatrix diagonal_state(const BasisSet& basis,
                             std::span<const double> weights) {
  if (static_cast<int>(weights.size()) != basis.dim()) {
    fail(ErrorCode::kDimensionMismatch,
         std::to_string(weights.size()) + " weights for a basis of dim " +
             std::to_string(basis.dim()));
  }
  const int d = basis.dim();
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const ComplexVector& v = basis.vectors()[i];
    m += weights[i] * (v * v.adjoint());
  }
  return make_density(m);
}

ParallelDecomposition parallel_decompose(const DensityMatrix& rho_bell) {
  if (rho_bell.dim() != 4) {
    fail(ErrorCode::kDimensionMismatch, "parallel_decompose needs dim 4");
  }
  const ComplexMatrix& rho = rho_bell.matrix();
  ComplexMatrix par = ComplexMatrix::Zero(4, 4);
  // Upper-triangle entries whose imaginary part is seen by CHSH operators;
  // for the remaining pairs it is the real part.
  auto keeps_imag = [](int i, int j) {
    return (i == 0 && j == 1) || (i == 0 && j == 2) || (i == 1 && j == 3) ||
           (i == 2 && j == 3);
  };
  for (int i = 0; i < 4; ++i) {
    par(i, i) = rho(i, i);
    for (int j = i + 1; j < 4; ++j) {
      const cd v = rho(i, j);
      const cd kept = keeps_imag(i, j) ? cd(0.0, v.imag()) : cd(v.real(), 0.0);
      par(i, j) = kept;
      par(j, i) = std::conj(kept);
    }
  }
  return {par, rho - par};
}

MixednessScalars mixedness(const DensityMatrix& rho) {
  const double purity = rho.matrix().squaredNorm();
  return {1.0 / purity, rho.eigenvalues().maxCoeff(), purity};
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    fail(ErrorCode::kDimensionMismatch, "concurrence needs a two-qubit state");
  }
  // The lambdas are the singular values of sqrt(rho) (Y x Y) conj(sqrt(rho)),
  // with round-off eigenvalues of rho zeroed first.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
  Eigen::VectorXd p = solver.eigenvalues();
  for (double& v : p) v = v < 64 * std::numeric_limits<double>::epsilon() ? 0.0 : v;
  const ComplexMatrix sqrt_rho = solver.eigenvectors() *
                                 p.cwiseSqrt().cast<cd>().asDiagonal() *
                                 solver.eigenvectors().adjoint();
  const ComplexMatrix a =
      sqrt_rho * kron(pauli(2), pauli(2)) * sqrt_rho.conjugate();
  Eigen::VectorXd l = Eigen::JacobiSVD<ComplexMatrix>(a).singularValues();
  std::sort(l.data(), l.data() + l.size(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, int party) {
  const int n = rho.num_qubits();
  if (party < 0 || party >= n) {
    fail(ErrorCode::kBadPartyIndex, "party " + std::to_string(party) +
                                        " outside [0, " + std::to_string(n) +
                                        ")");
  }
  const int bit = n - 1 - party;
  const int mask = 1 << bit;
  const int d = rho.dim();
  ComplexMatrix out(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const int ib = (i >> bit) & 1;
      const int jb = (j >> bit) & 1;
      const int ni = (i & ~mask) | (jb << bit);
      const int nj = (j & ~mask) | (ib << bit);
      out(ni, nj) = rho.matrix()(i, j);
    }
  }
  return out;
}

ComplexMatrix pauli(int index) {
  ComplexMatrix p(2, 2);
  switch (index) {
    case 0: p << 1, 0, 0, 1; break;
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, cd(0, -1), cd(0, 1), 0; break;
    case 3: p << 1, 0, 0, -1; break;
    default: fail(ErrorCode::kOutOfRange, "pauli index must be 0..3");
  }
  return p;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace bellmax
