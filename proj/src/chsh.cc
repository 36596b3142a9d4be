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

#include "bellmax/chsh.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bellmax/csv.h"
#include "bellmax/errors.h"

namespace bellmax {
namespace {

constexpr double kSumTolerance = 1e-12;
constexpr double kDomainSlack = 1e-9;
constexpr double kTwoSqrt2 = 2.0 * std::numbers::sqrt2;

// Clamps `v` into [lo, hi], tolerating round-off of kDomainSlack.
double checked_domain(double v, double lo, double hi, const char* what) {
  if (!(v >= lo - kDomainSlack && v <= hi + kDomainSlack)) {
    fail(ErrorCode::kOutOfRange, std::string(what) + " = " + format_number(v) +
                                     " outside [" + format_number(lo) + ", " + format_number(hi) +
                                     "]");
  }
  return std::clamp(v, lo, hi);
}

}  // namespace

BellDiagonalSpectrum::BellDiagonalSpectrum(std::array<double, 4> lambdas)
    : lambdas_(lambdas) {
  double sum = 0.0;
  for (double l : lambdas_) {
    if (!(l >= -kSumTolerance && l <= 1.0 + kSumTolerance)) {
      fail(ErrorCode::kBadSpectrum, "eigenvalue " + format_number(l) +
                                        " outside [0, 1]");
    }
    sum += l;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    fail(ErrorCode::kBadSpectrum, "eigenvalues sum to " + format_number(sum));
  }
}

BellDiagonalSpectrum BellDiagonalSpectrum::from_span(
    std::span<const double> lambdas) {
  if (lambdas.size() != 4) {
    fail(ErrorCode::kBadSpectrum, "a Bell-diagonal spectrum has 4 values, got " +
                                      std::to_string(lambdas.size()));
  }
  return BellDiagonalSpectrum({lambdas[0], lambdas[1], lambdas[2], lambdas[3]});
}

std::array<double, 4> BellDiagonalSpectrum::sorted() const {
  std::array<double, 4> s = lambdas_;
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

DensityMatrix BellDiagonalSpectrum::state() const {
  return diagonal_state(BasisSet::bell(), lambdas_);
}

BellDiagonalSpectrum bell_diagonal_spectrum(const DensityMatrix& rho,
                                            double tolerance) {
  if (rho.dim() != 4) {
    fail(ErrorCode::kDimensionMismatch,
         "two-qubit state expected, dim " + std::to_string(rho.dim()));
  }
  const ComplexMatrix m = change_basis(rho, BasisSet::bell()).matrix();
  const ComplexMatrix off = m - ComplexMatrix(m.diagonal().asDiagonal());
  const double norm = off.norm();
  if (norm > tolerance) {
    fail(ErrorCode::kNotBellDiagonal,
         "off-diagonal norm in the Bell basis is " + format_number(norm));
  }
  std::array<double, 4> l;
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    l[i] = std::max(0.0, m(i, i).real());
    sum += l[i];
  }
  for (double& v : l) v /= sum;
  return BellDiagonalSpectrum(l);
}

PureSuperposition::PureSuperposition(std::array<double, 4> coeffs)
    : coeffs_(coeffs) {
  double norm2 = 0.0;
  for (double c : coeffs_) norm2 += c * c;
  if (std::abs(norm2 - 1.0) > kSumTolerance) {
    fail(ErrorCode::kNotNormalized,
         "sum of squared coefficients is " + format_number(norm2));
  }
}

PureSuperposition PureSuperposition::from_vector(const ComplexVector& psi) {
  if (psi.size() != 4) {
    fail(ErrorCode::kDimensionMismatch,
         "two-qubit vector expected, size " + std::to_string(psi.size()));
  }
  ComplexVector c = BasisSet::bell().to_basis() * psi;
  Eigen::Index big = 0;
  c.cwiseAbs().maxCoeff(&big);
  if (std::abs(c(big)) == 0.0) fail(ErrorCode::kNotNormalized, "zero vector");
  c *= std::conj(c(big)) / std::abs(c(big));
  std::array<double, 4> real{};
  for (int i = 0; i < 4; ++i) {
    if (std::abs(c(i).imag()) > kStateTolerance) {
      fail(ErrorCode::kOutOfRange,
           "Bell coefficients are complex (imaginary part " +
               format_number(c(i).imag()) + "); only real superpositions are supported");
    }
    real[i] = c(i).real();
  }
  return PureSuperposition(real);
}

std::array<double, 4> PureSuperposition::weights() const {
  std::array<double, 4> w;
  for (int i = 0; i < 4; ++i) w[i] = coeffs_[i] * coeffs_[i];
  return w;
}

ComplexVector PureSuperposition::vector() const {
  ComplexVector c(4);
  for (int i = 0; i < 4; ++i) c(i) = coeffs_[i];
  return BasisSet::bell().to_basis().adjoint() * c;
}

DensityMatrix PureSuperposition::state() const {
  ComplexVector v = vector();
  v.normalize();
  return pure_state(v);
}

std::string frontier_measure_name(FrontierMeasure measure) {
  return measure == FrontierMeasure::kParticipationRatio ? "R" : "lambda_max";
}

std::string frontier_tag_name(FrontierTag tag) {
  switch (tag) {
    case FrontierTag::kRhoI: return "rho_I";
    case FrontierTag::kRhoII: return "rho_II";
    case FrontierTag::kLambdaMid: return "lambda_mid";
    case FrontierTag::kLambdaLow: return "lambda_low";
    case FrontierTag::kWerner3: return "werner3";
  }
  return "?";
}

double chsh_max_bell_diagonal(const BellDiagonalSpectrum& spectrum) {
  const auto l = spectrum.sorted();
  return kTwoSqrt2 * std::hypot(l[0] - l[3], l[1] - l[2]);
}

FrontierPoint chsh_frontier_R(double participation_ratio) {
  const double r = checked_domain(participation_ratio, 1.0, 4.0, "R");
  auto rho_i = [](double v) { return std::sqrt(8.0 / v); };
  auto rho_ii = [](double v) {
    return 4.0 * std::sqrt(std::max(0.0, (4.0 - v) / (4.0 * v)));
  };
  if (r == 2.0) {
    const double a = rho_i(r);
    const double b = rho_ii(r);
    if (std::abs(a - b) > 1e-12) {
      throw std::logic_error("CHSH R-frontier branches disagree at R = 2");
    }
    return {FrontierMeasure::kParticipationRatio, r, a, FrontierTag::kRhoI};
  }
  if (r < 2.0) {
    return {FrontierMeasure::kParticipationRatio, r, rho_i(r),
            FrontierTag::kRhoI};
  }
  return {FrontierMeasure::kParticipationRatio, r, rho_ii(r),
          FrontierTag::kRhoII};
}

FrontierPoint chsh_frontier_lambda_point(double lambda_max) {
  const double l = checked_domain(lambda_max, 0.25, 1.0, "lambda_max");
  if (l <= 1.0 / 3.0) {
    return {FrontierMeasure::kMaxEigenvalue, l, kTwoSqrt2 * (4.0 * l - 1.0),
            FrontierTag::kLambdaLow};
  }
  if (l <= 0.5) {
    return {FrontierMeasure::kMaxEigenvalue, l,
            kTwoSqrt2 * std::hypot(l, 1.0 - 3.0 * l),
            FrontierTag::kLambdaMid};
  }
  return {FrontierMeasure::kMaxEigenvalue, l,
          kTwoSqrt2 * std::hypot(l, 1.0 - l), FrontierTag::kRhoI};
}

double chsh_frontier_lambda(double lambda_max) {
  return chsh_frontier_lambda_point(lambda_max).b_max;
}

DensityMatrix mnms_state(double x, MnmsRegion region) {
  std::array<double, 4> w;
  if (region == MnmsRegion::kI) {
    if (!(x >= 0.0 && x <= 0.5)) {
      fail(ErrorCode::kOutOfRange, "rho_I needs x in [0, 1/2], got " + format_number(x));
    }
    w = {1.0 - x, x, 0.0, 0.0};
  } else {
    if (!(x >= 0.0 && x <= 0.25)) {
      fail(ErrorCode::kOutOfRange,
           "rho_II needs x in [0, 1/4], got " + format_number(x));
    }
    w = {x, x, (1.0 - 2.0 * x) / 2.0, (1.0 - 2.0 * x) / 2.0};
  }
  return diagonal_state(BasisSet::bell(), w);
}

double mems_g(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    fail(ErrorCode::kOutOfRange, "MEMS needs x in [0, 1], got " + format_number(x));
  }
  return x <= 2.0 / 3.0 ? 1.0 / 3.0 : x / 2.0;
}

DensityMatrix mems_state(double x) {
  const double g = mems_g(x);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = g;
  m(1, 1) = 1.0 - 2.0 * g;
  m(3, 3) = g;
  m(0, 3) = x / 2.0;
  m(3, 0) = x / 2.0;
  return make_density(m);
}

double chsh_max_mems(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    fail(ErrorCode::kOutOfRange, "MEMS needs x in [0, 1], got " + format_number(x));
  }
  if (x <= 1.0 / 3.0) return 2.0 / 3.0 * std::sqrt(1.0 + 9.0 * x * x);
  return kTwoSqrt2 * x;
}

double chsh_max_pure(const PureSuperposition& psi) {
  const auto l = psi.weights();
  return kTwoSqrt2 * std::hypot(l[0] + l[3], l[1] + l[2]);
}

double pure_concurrence_sq(const PureSuperposition& psi) {
  const auto l = psi.weights();
  return 1.0 - 4.0 * (l[0] + l[3]) * (l[1] + l[2]);
}

double superposition_example_theta(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    fail(ErrorCode::kOutOfRange, "alpha must lie in [0, 1], got " + format_number(alpha));
  }
  const double a2 = alpha * alpha;
  return 2.0 * std::sqrt(2.0 - a2 * (2.0 - a2));
}

Theorem1Result theorem1_lower_bound(std::span<const PureSuperposition> states,
                                    std::span<const double> alpha) {
  if (states.empty() || states.size() != alpha.size()) {
    fail(ErrorCode::kDimensionMismatch,
         std::to_string(states.size()) + " states but " +
             std::to_string(alpha.size()) + " weights");
  }
  double norm2 = 0.0;
  for (double a : alpha) norm2 += a * a;
  if (std::abs(norm2 - 1.0) > kSumTolerance) {
    fail(ErrorCode::kNotNormalized, "sum alpha_i^2 = " + format_number(norm2));
  }
  for (size_t i = 0; i < states.size(); ++i) {
    for (size_t j = i + 1; j < states.size(); ++j) {
      double dot = 0.0;
      for (int k = 0; k < 4; ++k) {
        dot += states[i].coeffs()[k] * states[j].coeffs()[k];
      }
      if (std::abs(dot) > kStateTolerance) {
        fail(ErrorCode::kNotOrthogonal,
             "states " + std::to_string(i) + " and " + std::to_string(j) +
                 " overlap by " + format_number(dot));
      }
    }
  }
  std::array<double, 4> combined{};
  double bound2 = 0.0;
  for (size_t i = 0; i < states.size(); ++i) {
    const double b = chsh_max_pure(states[i]);
    const double a2 = alpha[i] * alpha[i];
    bound2 += a2 * a2 * b * b;
    for (int k = 0; k < 4; ++k) combined[k] += alpha[i] * states[i].coeffs()[k];
  }
  double cnorm = 0.0;
  for (double c : combined) cnorm += c * c;
  cnorm = std::sqrt(cnorm);
  for (double& c : combined) c /= cnorm;
  const double actual = chsh_max_pure(PureSuperposition(combined));
  const double bound = std::sqrt(bound2);
  return {bound, actual, actual * actual - bound2,
          actual >= bound - 1e-10};
}

DensityMatrix werner2(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::kOutOfRange, "Werner p must lie in [0, 1], got " + format_number(p));
  }
  const double q = (1.0 - p) / 4.0;
  return diagonal_state(BasisSet::bell(), std::array<double, 4>{q, q, q, p + q});
}

}  // namespace bellmax
