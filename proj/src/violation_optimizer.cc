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

#include "bellmax/violation_optimizer.h"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "bellmax/errors.h"
#include "bellmax/random.h"

namespace bellmax {
namespace {

constexpr double kConvergedGap = 1e-6;

using SettingVectors = std::vector<std::array<Eigen::Vector3d, 2>>;

struct StartResult {
  double value = 0.0;
  SettingVectors vectors;
};

class Ascent {
 public:
  Ascent(const CorrelationTensor& tensor, const std::vector<BellTerm>& terms,
         const OptimizerOptions& options)
      : tensor_(tensor), terms_(terms), options_(options),
        n_(tensor.n_parties()), scratch_(n_) {
    for (int k = 0; k < n_; ++k) {
      for (int w = 0; w < 2; ++w) {
        for (size_t t = 0; t < terms_.size(); ++t) {
          if (terms_[t].choices[k] == w) touching_[k][w].push_back(t);
        }
      }
    }
  }

  StartResult run(std::uint64_t seed) {
    Rng rng(seed);
    SettingVectors vecs(n_);
    for (auto& pair : vecs) {
      for (auto& v : pair) {
        const double theta = std::numbers::pi * rng.uniform();
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        v = Direction::from_angles(theta, phi).vec;
      }
    }
    double value = evaluate(vecs);
    SettingVectors before = vecs;
    SettingVectors trial = vecs;
    for (int sweep = 0; sweep < options_.max_sweeps; ++sweep) {
      before = vecs;
      for (int k = 0; k < n_; ++k) {
        for (int w = 0; w < 2; ++w) {
          const Eigen::Vector3d g = gradient(vecs, k, w);
          const double norm = g.norm();
          if (norm > 1e-300) vecs[k][w] = g / norm;
        }
      }
      double next = evaluate(vecs);
      // Extrapolate along the sweep's displacement while it keeps paying.
      for (double step = 1.0; step <= 64.0; step *= 2.0) {
        for (int k = 0; k < n_; ++k) {
          for (int w = 0; w < 2; ++w) {
            trial[k][w] =
                (vecs[k][w] + step * (vecs[k][w] - before[k][w])).normalized();
          }
        }
        const double extrapolated = evaluate(trial);
        if (!(extrapolated > next)) break;
        next = extrapolated;
        std::swap(vecs, trial);
      }
      const double gain = next - value;
      value = std::max(value, next);
      if (gain < options_.tolerance) break;
    }
    return {value, std::move(vecs)};
  }

 private:
  double evaluate(const SettingVectors& vecs) {
    double total = 0.0;
    for (const BellTerm& term : terms_) {
      for (int m = 0; m < n_; ++m) scratch_[m] = vecs[m][term.choices[m]];
      double out[3];
      tensor_.contract(scratch_, -1, out);
      total += term.coefficient * out[0];
    }
    return total;
  }

  Eigen::Vector3d gradient(const SettingVectors& vecs, int k, int w) {
    Eigen::Vector3d g = Eigen::Vector3d::Zero();
    for (size_t t : touching_[k][w]) {
      const BellTerm& term = terms_[t];
      for (int m = 0; m < n_; ++m) scratch_[m] = vecs[m][term.choices[m]];
      double out[3];
      tensor_.contract(scratch_, k, out);
      g += term.coefficient * Eigen::Vector3d(out[0], out[1], out[2]);
    }
    return g;
  }

  const CorrelationTensor& tensor_;
  const std::vector<BellTerm>& terms_;
  const OptimizerOptions& options_;
  int n_;
  std::vector<Eigen::Vector3d> scratch_;
  std::array<std::array<std::vector<size_t>, 2>, 8> touching_;
};

}  // namespace

int default_starts(const BellFamily& family) {
  switch (family.kind) {
    case BellKind::kChsh: return 50;
    case BellKind::kMermin: return 200;
    case BellKind::kMabk4: return 500;
    case BellKind::kMabkN: break;
  }
  fail(ErrorCode::kWrongPartyCount,
       "no optimizer for " + family.name());
}

OptimizationReport maximize_violation(const DensityMatrix& rho,
                                      const BellFamily& family,
                                      const OptimizerOptions& options) {
  const auto& terms = bell_terms(family);
  if (rho.dim() != (1 << family.n_parties)) {
    fail(ErrorCode::kDimensionMismatch,
         family.name() + " needs dimension " +
             std::to_string(1 << family.n_parties) + ", state has " +
             std::to_string(rho.dim()));
  }
  const int starts = options.starts == 0 ? default_starts(family)
                                         : options.starts;
  if (starts < 1) {
    fail(ErrorCode::kOutOfRange,
         "starts must be >= 1, got " + std::to_string(starts));
  }
  if (options.workers < 1) {
    fail(ErrorCode::kOutOfRange,
         "workers must be >= 1, got " + std::to_string(options.workers));
  }
  const CorrelationTensor tensor = CorrelationTensor::of(rho);

  std::vector<StartResult> results(starts);
  auto work = [&](int worker) {
    Ascent ascent(tensor, terms, options);
    for (int s = worker; s < starts; s += options.workers) {
      results[s] = ascent.run(stream_seed(options.seed, s));
    }
  };
  const int workers = std::min(options.workers, starts);
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  int best = 0;
  for (int s = 1; s < starts; ++s) {
    if (results[s].value > results[best].value) best = s;
  }
  int converged = 0;
  for (const StartResult& r : results) {
    if (results[best].value - r.value <= kConvergedGap) ++converged;
  }
  return {results[best].value,
          ObserverSettings::from_vectors(results[best].vectors), starts, best,
          static_cast<double>(converged) / starts};
}

OptimizationReport maximize_violation(const DensityMatrix& rho,
                                      const BellFamily& family, int starts,
                                      std::uint64_t seed) {
  OptimizerOptions options;
  options.starts = starts;
  options.seed = seed;
  return maximize_violation(rho, family, options);
}

}  // namespace bellmax
