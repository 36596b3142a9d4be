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

#include "bellmax/bell_operators.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "bellmax/errors.h"

namespace bellmax {
namespace {

using cd = std::complex<double>;

constexpr double kUnitTolerance = 1e-12;

std::vector<BellTerm> make_chsh_terms() {
  return {{1.0, {0, 0}}, {1.0, {0, 1}}, {1.0, {1, 0}}, {-1.0, {1, 1}}};
}

std::vector<BellTerm> make_mermin_terms() {
  return {{1.0, {0, 0, 0}},
          {-1.0, {0, 1, 1}},
          {-1.0, {1, 0, 1}},
          {-1.0, {1, 1, 0}}};
}

// Sign of each product by the number of b settings it uses: + for 0, 3, 4
// and - for 1, 2. The overall 1/2 puts the local bound at 2.
std::vector<BellTerm> make_mabk4_terms() {
  std::vector<BellTerm> terms;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> choices(4);
    int bs = 0;
    for (int k = 0; k < 4; ++k) {
      choices[k] = (mask >> (3 - k)) & 1;
      bs += choices[k];
    }
    const double sign = (bs == 1 || bs == 2) ? -1.0 : 1.0;
    terms.push_back({0.5 * sign, std::move(choices)});
  }
  return terms;
}

}  // namespace

Direction Direction::from_angles(double theta, double phi) {
  Direction d;
  d.theta = theta;
  d.phi = phi;
  d.vec = Eigen::Vector3d(std::sin(theta) * std::cos(phi),
                          std::sin(theta) * std::sin(phi), std::cos(theta));
  return d;
}

Direction Direction::from_vector(const Eigen::Vector3d& v) {
  const double norm = v.norm();
  if (!(norm > 0.0)) fail(ErrorCode::kOutOfRange, "zero setting vector");
  Direction d;
  d.vec = v / norm;
  d.theta = std::acos(std::clamp(d.vec.z(), -1.0, 1.0));
  double phi = std::atan2(d.vec.y(), d.vec.x());
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  d.phi = phi;
  return d;
}

ObserverSettings::ObserverSettings(
    std::vector<std::array<Direction, 2>> parties)
    : parties_(std::move(parties)) {
  if (parties_.empty()) {
    fail(ErrorCode::kWrongPartyCount, "settings need at least one party");
  }
  for (const auto& pair : parties_) {
    for (const Direction& d : pair) {
      if (std::abs(d.vec.norm() - 1.0) > kUnitTolerance) {
        fail(ErrorCode::kOutOfRange, "setting vector is not a unit vector");
      }
    }
  }
}

ObserverSettings ObserverSettings::from_angles(std::span<const double> angles) {
  if (angles.empty() || angles.size() % 4 != 0) {
    fail(ErrorCode::kWrongPartyCount,
         "expected 4 angles per party, got " + std::to_string(angles.size()));
  }
  std::vector<std::array<Direction, 2>> parties;
  for (size_t i = 0; i < angles.size(); i += 4) {
    parties.push_back({Direction::from_angles(angles[i], angles[i + 1]),
                       Direction::from_angles(angles[i + 2], angles[i + 3])});
  }
  return ObserverSettings(std::move(parties));
}

ObserverSettings ObserverSettings::from_vectors(
    const std::vector<std::array<Eigen::Vector3d, 2>>& vectors) {
  std::vector<std::array<Direction, 2>> parties;
  for (const auto& pair : vectors) {
    parties.push_back(
        {Direction::from_vector(pair[0]), Direction::from_vector(pair[1])});
  }
  return ObserverSettings(std::move(parties));
}

std::vector<double> ObserverSettings::angles() const {
  std::vector<double> out;
  for (const auto& pair : parties_) {
    for (const Direction& d : pair) {
      out.push_back(d.theta);
      out.push_back(d.phi);
    }
  }
  return out;
}

std::string BellFamily::name() const {
  switch (kind) {
    case BellKind::kChsh: return "CHSH";
    case BellKind::kMermin: return "Mermin";
    case BellKind::kMabk4: return "MABK4";
    case BellKind::kMabkN: return "MABK_N(" + std::to_string(n_parties) + ")";
  }
  return "?";
}

BellFamily chsh_family() {
  return {BellKind::kChsh, 2, 2.0, 2.0 * std::numbers::sqrt2};
}

BellFamily mermin_family() { return {BellKind::kMermin, 3, 2.0, 4.0}; }

BellFamily mabk4_family() {
  return {BellKind::kMabk4, 4, 2.0, 4.0 * std::numbers::sqrt2};
}

BellFamily mabk_n_family(int n_parties) {
  if (n_parties < 2) {
    fail(ErrorCode::kBadPartyCount, "MABK needs at least 2 parties");
  }
  return {BellKind::kMabkN, n_parties, 2.0,
          std::pow(2.0, (n_parties + 1) / 2.0)};
}

const std::vector<BellTerm>& bell_terms(const BellFamily& family) {
  static const std::vector<BellTerm> chsh = make_chsh_terms();
  static const std::vector<BellTerm> mermin = make_mermin_terms();
  static const std::vector<BellTerm> mabk4 = make_mabk4_terms();
  switch (family.kind) {
    case BellKind::kChsh: return chsh;
    case BellKind::kMermin: return mermin;
    case BellKind::kMabk4: return mabk4;
    case BellKind::kMabkN: break;
  }
  fail(ErrorCode::kWrongPartyCount,
       "no explicit operator for " + family.name());
}

ComplexMatrix spin_operator(const Eigen::Vector3d& direction) {
  ComplexMatrix m(2, 2);
  m << direction.z(), cd(direction.x(), -direction.y()),
      cd(direction.x(), direction.y()), -direction.z();
  return m;
}

ComplexMatrix bell_operator(const BellFamily& family,
                            const ObserverSettings& settings) {
  const auto& terms = bell_terms(family);
  if (settings.n_parties() != family.n_parties) {
    fail(ErrorCode::kWrongPartyCount,
         family.name() + " needs " + std::to_string(family.n_parties) +
             " parties, settings have " +
             std::to_string(settings.n_parties()));
  }
  const int n = family.n_parties;
  const int dim = 1 << n;
  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  for (const BellTerm& term : terms) {
    ComplexMatrix product = spin_operator(settings.vector(0, term.choices[0]));
    for (int k = 1; k < n; ++k) {
      product = kron(product, spin_operator(settings.vector(k, term.choices[k])));
    }
    total += term.coefficient * product;
  }
  return total;
}

ComplexMatrix chsh_operator(const ObserverSettings& settings) {
  return bell_operator(chsh_family(), settings);
}

ComplexMatrix mermin_operator(const ObserverSettings& settings) {
  return bell_operator(mermin_family(), settings);
}

ComplexMatrix mabk_operator(const ObserverSettings& settings) {
  return bell_operator(mabk4_family(), settings);
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& op) {
  if (op.rows() != rho.dim() || op.cols() != rho.dim()) {
    fail(ErrorCode::kDimensionMismatch,
         "operator is " + std::to_string(op.rows()) + "x" +
             std::to_string(op.cols()) + ", state dim " +
             std::to_string(rho.dim()));
  }
  const cd tr = (rho.matrix() * op).trace();
  if (std::abs(tr.imag()) > kStateTolerance) {
    fail(ErrorCode::kNotHermitian,
         "Tr(rho B) has imaginary part " + std::to_string(tr.imag()));
  }
  return tr.real();
}

CorrelationTensor CorrelationTensor::of(const DensityMatrix& rho) {
  const int n = rho.num_qubits();
  const int dim = rho.dim();
  int size = 1;
  for (int k = 0; k < n; ++k) size *= 3;
  std::vector<double> values(size);
  const ComplexMatrix& m = rho.matrix();
  std::vector<int> comp(n);
  for (int flat = 0; flat < size; ++flat) {
    int rest = flat;
    for (int k = n - 1; k >= 0; --k) {
      comp[k] = rest % 3;
      rest /= 3;
    }
    // Pauli string P maps |i> to phase(i) |i ^ flip>, so
    // Tr(rho P) = sum_i phase(i) rho(i, i ^ flip).
    int flip = 0;
    for (int k = 0; k < n; ++k) {
      if (comp[k] != 2) flip |= 1 << (n - 1 - k);
    }
    cd total = 0.0;
    for (int i = 0; i < dim; ++i) {
      cd phase = 1.0;
      for (int k = 0; k < n; ++k) {
        const int bit = (i >> (n - 1 - k)) & 1;
        if (comp[k] == 1) {
          phase *= bit == 0 ? cd(0, 1) : cd(0, -1);
        } else if (comp[k] == 2 && bit == 1) {
          phase = -phase;
        }
      }
      total += phase * m(i, i ^ flip);
    }
    values[flat] = total.real();
  }
  return CorrelationTensor(n, std::move(values));
}

double CorrelationTensor::at(std::span<const int> components) const {
  int flat = 0;
  for (int c : components) flat = flat * 3 + c;
  return values_[flat];
}

void CorrelationTensor::contract(std::span<const Eigen::Vector3d> vectors,
                                 int keep, double out[3]) const {
  // Scratch for at most 3^8 entries; more parties never reach this path.
  double buf[2][6561];
  const double* cur = values_.data();
  int size = static_cast<int>(values_.size());
  int which = 0;
  // Trailing parties, innermost index first.
  for (int k = n_ - 1; k > keep; --k) {
    const Eigen::Vector3d& v = vectors[k];
    const int next = size / 3;
    double* dst = buf[which];
    for (int i = 0; i < next; ++i) {
      const double* src = cur + 3 * i;
      dst[i] = src[0] * v[0] + src[1] * v[1] + src[2] * v[2];
    }
    cur = dst;
    size = next;
    which ^= 1;
  }
  // Leading parties, outermost index first.
  for (int k = 0; k < keep; ++k) {
    const Eigen::Vector3d& v = vectors[k];
    const int next = size / 3;
    double* dst = buf[which];
    for (int i = 0; i < next; ++i) {
      dst[i] = cur[i] * v[0] + cur[next + i] * v[1] + cur[2 * next + i] * v[2];
    }
    cur = dst;
    size = next;
    which ^= 1;
  }
  if (keep < 0) {
    out[0] = cur[0];
  } else {
    out[0] = cur[0];
    out[1] = cur[1];
    out[2] = cur[2];
  }
}

double bell_value(const CorrelationTensor& tensor, const BellFamily& family,
                  const ObserverSettings& settings) {
  if (tensor.n_parties() != family.n_parties ||
      settings.n_parties() != family.n_parties) {
    fail(ErrorCode::kWrongPartyCount, family.name() + " party count mismatch");
  }
  const int n = family.n_parties;
  std::vector<Eigen::Vector3d> vecs(n);
  double total = 0.0;
  for (const BellTerm& term : bell_terms(family)) {
    for (int k = 0; k < n; ++k) vecs[k] = settings.vector(k, term.choices[k]);
    double v[3];
    tensor.contract(vecs, -1, v);
    total += term.coefficient * v[0];
  }
  return total;
}

}  // namespace bellmax
