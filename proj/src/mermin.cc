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

#include "bellmax/mermin.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bellmax/csv.h"
#include "bellmax/errors.h"
#include "bellmax/random.h"

namespace bellmax {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPptSlack = 1e-12;

void require_three_parties(const PairedSpectrum& spectrum) {
  if (spectrum.parties() != 3) {
    fail(ErrorCode::kWrongPartyCount,
         "Mermin analysis needs 3 parties, spectrum has " +
             std::to_string(spectrum.parties()));
  }
}

// f(x) = sum_t c_t cos(s_t . x) over the six azimuths.
struct PhaseTerm {
  double coefficient;
  std::array<int, 6> multipliers;
};

std::vector<PhaseTerm> phase_terms(const PairedSpectrum& spectrum) {
  // Setting choices (a = 0, b = 1) and signs of the Mermin products.
  static constexpr int kChoices[4][3] = {
      {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  static constexpr double kSigns[4] = {1.0, -1.0, -1.0, -1.0};
  std::vector<PhaseTerm> terms;
  for (int j = 0; j < 4; ++j) {
    const double d = spectrum.difference(j);
    if (d == 0.0) continue;
    for (int t = 0; t < 4; ++t) {
      PhaseTerm term{d * kSigns[t], {}};
      for (int k = 0; k < 3; ++k) {
        // Party k's phase enters with +1 for bit 0 of j, -1 for bit 1.
        const int bit = (j >> (2 - k)) & 1;
        term.multipliers[2 * k + kChoices[t][k]] = bit == 0 ? 1 : -1;
      }
      terms.push_back(term);
    }
  }
  return terms;
}

double phase_value(const std::vector<PhaseTerm>& terms,
                   const std::array<double, 6>& x) {
  double total = 0.0;
  for (const PhaseTerm& t : terms) {
    double arg = 0.0;
    for (int i = 0; i < 6; ++i) arg += t.multipliers[i] * x[i];
    total += t.coefficient * std::cos(arg);
  }
  return total;
}

// Exact coordinate ascent: along one phase f = A cos x + B sin x + C.
double ascend(const std::vector<PhaseTerm>& terms, std::array<double, 6>& x) {
  double value = phase_value(terms, x);
  for (int sweep = 0; sweep < 2000; ++sweep) {
    for (int i = 0; i < 6; ++i) {
      x[i] = 0.0;
      const double f0 = phase_value(terms, x);
      x[i] = kPi / 2.0;
      const double f1 = phase_value(terms, x);
      x[i] = kPi;
      const double f2 = phase_value(terms, x);
      const double a = (f0 - f2) / 2.0;
      const double b = f1 - (f0 + f2) / 2.0;
      x[i] = std::atan2(b, a);
    }
    const double next = phase_value(terms, x);
    const double gain = next - value;
    value = std::max(value, next);
    if (gain < 1e-7) break;
  }
  return value;
}

// Newton polish on the stationary point, skipping the flat directions
// that come from the rotational symmetry of the objective.
double polish(const std::vector<PhaseTerm>& terms, std::array<double, 6>& x,
              double value) {
  for (int iter = 0; iter < 50; ++iter) {
    Eigen::Matrix<double, 6, 1> grad = Eigen::Matrix<double, 6, 1>::Zero();
    Eigen::Matrix<double, 6, 6> neg_hess = Eigen::Matrix<double, 6, 6>::Zero();
    for (const PhaseTerm& t : terms) {
      Eigen::Matrix<double, 6, 1> s;
      double arg = 0.0;
      for (int i = 0; i < 6; ++i) {
        s(i) = t.multipliers[i];
        arg += t.multipliers[i] * x[i];
      }
      grad -= t.coefficient * std::sin(arg) * s;
      neg_hess += t.coefficient * std::cos(arg) * s * s.transpose();
    }
    if (grad.norm() < 1e-14) break;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> eig(neg_hess);
    if (eig.eigenvalues().minCoeff() < -1e-9) break;
    Eigen::Matrix<double, 6, 1> step = Eigen::Matrix<double, 6, 1>::Zero();
    for (int i = 0; i < 6; ++i) {
      const double mu = eig.eigenvalues()(i);
      if (mu > 1e-10) {
        step += eig.eigenvectors().col(i) *
                (eig.eigenvectors().col(i).dot(grad) / mu);
      }
    }
    std::array<double, 6> trial;
    for (int i = 0; i < 6; ++i) trial[i] = x[i] + step(i);
    const double next = phase_value(terms, trial);
    if (!(next >= value)) break;
    x = trial;
    value = next;
  }
  return value;
}

// Value of the two-angle reduction at phi with psi chosen optimally.
double ansatz_at(double d0, double d1, double d2, double d3, double phi) {
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  return 4.0 * std::hypot(d0 * s + d3 * c, d1 * s + d2 * c);
}

}  // namespace

double mermin_bound_diagonal(const PairedSpectrum& spectrum) {
  require_three_parties(spectrum);
  return 4.0 * spectrum.difference_norm();
}

double mermin_equatorial_value(const PairedSpectrum& spectrum,
                               const std::array<double, 6>& phases) {
  require_three_parties(spectrum);
  return phase_value(phase_terms(spectrum), phases);
}

MerminAngles solve_mermin_angles(const PairedSpectrum& spectrum) {
  require_three_parties(spectrum);
  const double d0 = spectrum.difference(0);
  const double d1 = spectrum.difference(1);
  const double d2 = spectrum.difference(2);
  const double d3 = spectrum.difference(3);
  auto ansatz = [&](double phi, double psi) {
    return 4.0 * (d0 * std::sin(phi) * std::sin(psi) +
                  d1 * std::sin(phi) * std::cos(psi) +
                  d2 * std::cos(phi) * std::cos(psi) +
                  d3 * std::cos(phi) * std::sin(psi));
  };

  MerminAngles out{};
  out.ansatz_value = -1.0;
  bool settled = false;
  for (int gi = 0; gi < 4; ++gi) {
    for (int gj = 0; gj < 4; ++gj) {
      double phi = (2 * gi + 1) * kPi / 8.0;
      double psi = (2 * gj + 1) * kPi / 8.0;
      bool converged = false;
      for (int iter = 0; iter < 10000; ++iter) {
        const double next_phi =
            std::atan2(d0 * std::sin(psi) + d1 * std::cos(psi),
                       d3 * std::sin(psi) + d2 * std::cos(psi));
        const double next_psi =
            std::atan2(d0 * std::sin(next_phi) + d3 * std::cos(next_phi),
                       d1 * std::sin(next_phi) + d2 * std::cos(next_phi));
        const double change =
            std::abs(next_phi - phi) + std::abs(next_psi - psi);
        phi = next_phi;
        psi = next_psi;
        if (change < 1e-13) {
          converged = true;
          break;
        }
      }
      if (!converged) continue;
      settled = true;
      const double v = ansatz(phi, psi);
      if (v > out.ansatz_value) {
        out.ansatz_value = v;
        out.phi = phi;
        out.psi = psi;
      }
    }
  }
  out.used_fallback = !settled;
  if (!settled) {
    constexpr int kGrid = 200;
    double best_phi = 0.0;
    double best = -1.0;
    for (int i = 0; i < kGrid; ++i) {
      const double phi = 2.0 * kPi * i / kGrid;
      const double v = ansatz_at(d0, d1, d2, d3, phi);
      if (v > best) {
        best = v;
        best_phi = phi;
      }
    }
    double lo = best_phi - 2.0 * kPi / kGrid;
    double hi = best_phi + 2.0 * kPi / kGrid;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-14; ++iter) {
      const double m1 = hi - ratio * (hi - lo);
      const double m2 = lo + ratio * (hi - lo);
      if (ansatz_at(d0, d1, d2, d3, m1) < ansatz_at(d0, d1, d2, d3, m2)) {
        lo = m1;
      } else {
        hi = m2;
      }
    }
    out.phi = (lo + hi) / 2.0;
    out.psi = std::atan2(d0 * std::sin(out.phi) + d3 * std::cos(out.phi),
                         d1 * std::sin(out.phi) + d2 * std::cos(out.phi));
    out.ansatz_value = ansatz(out.phi, out.psi);
  }

  // Exact maximum over the six phases from deterministic starts.
  const std::vector<PhaseTerm> terms = phase_terms(spectrum);
  out.value = 0.0;
  out.phases = {};
  if (!terms.empty()) {
    Rng rng(0x4d45524d494eULL);
    out.value = -1e300;
    for (int start = 0; start < 24; ++start) {
      std::array<double, 6> x;
      for (double& v : x) v = 2.0 * kPi * rng.uniform();
      double v = ascend(terms, x);
      v = polish(terms, x, v);
      if (v > out.value) {
        out.value = v;
        out.phases = x;
      }
    }
    for (double& p : out.phases) {
      p = std::fmod(p, 2.0 * kPi);
      if (p < 0.0) p += 2.0 * kPi;
    }
  }
  return out;
}

DensityMatrix werner3(double x) { return werner3_spectrum(x).state(); }

PairedSpectrum werner3_spectrum(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    fail(ErrorCode::kOutOfRange,
         "Werner-3 weight must lie in [0, 1], got " + format_number(x));
  }
  std::vector<double> v(8, (1.0 - x) / 8.0);
  v[0] += x;
  return PairedSpectrum::from_pairs(v, 3);
}

double mermin_frontier_R(double participation_ratio) {
  const double r = participation_ratio;
  if (!(r >= 1.0 - 1e-9 && r <= 8.0 + 1e-9)) {
    fail(ErrorCode::kOutOfRange,
         "R = " + format_number(r) + " outside [1, 8]");
  }
  const double clamped = std::clamp(r, 1.0, 8.0);
  return 4.0 * std::sqrt(std::max(0.0, (8.0 - clamped) / (7.0 * clamped)));
}

CriticalRatios critical_ratios() { return {32.0 / 11.0, 25.0 / 4.0}; }

std::array<bool, 3> ppt_flags(const PairedSpectrum& spectrum) {
  require_three_parties(spectrum);
  static constexpr int kPartner[3][4] = {
      {3, 2, 1, 0}, {2, 3, 0, 1}, {1, 0, 3, 2}};
  std::array<bool, 3> flags;
  for (int cut = 0; cut < 3; ++cut) {
    bool positive = true;
    for (int j = 0; j < 4; ++j) {
      const int p = kPartner[cut][j];
      if (spectrum.pair_sum(p) < std::abs(spectrum.difference(j)) - kPptSlack) {
        positive = false;
      }
    }
    flags[cut] = positive;
  }
  return flags;
}

std::string category_name(DistillabilityCategory category) {
  switch (category) {
    case DistillabilityCategory::kDistillableLocal: return "distillable_local";
    case DistillabilityCategory::kDistillableNonlocal:
      return "distillable_nonlocal";
    case DistillabilityCategory::kBoundLocal: return "bound_local";
    case DistillabilityCategory::kBoundNonlocal: return "bound_nonlocal";
  }
  return "?";
}

DistillabilityReport classify(const PairedSpectrum& spectrum) {
  DistillabilityReport r;
  r.ppt = ppt_flags(spectrum);
  r.distillable = !(r.ppt[0] || r.ppt[1] || r.ppt[2]);
  r.mermin_value = mermin_bound_diagonal(spectrum);
  const bool nonlocal = r.mermin_value > 2.0;
  if (r.distillable) {
    r.category = nonlocal ? DistillabilityCategory::kDistillableNonlocal
                          : DistillabilityCategory::kDistillableLocal;
  } else {
    r.category = nonlocal ? DistillabilityCategory::kBoundNonlocal
                          : DistillabilityCategory::kBoundLocal;
  }
  if (!r.distillable && nonlocal && spectrum.is_sorted()) {
    throw std::logic_error(
        "sorted GHZ-diagonal spectrum with a PPT cut exceeds the local "
        "bound");
  }
  return r;
}

}  // namespace bellmax
