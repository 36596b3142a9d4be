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

#include "bellmax/survey.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "bellmax/errors.h"
#include "bellmax/mermin.h"
#include "bellmax/random.h"

namespace bellmax {
namespace {

constexpr double kHistogramTop = 4.0;

struct Partial {
  std::array<std::int64_t, 4> counts{};
  std::vector<std::int64_t> bins;
  std::int64_t ppt_checked = 0;
  std::int64_t ppt_mismatches = 0;

  void merge(const Partial& other) {
    for (int c = 0; c < 4; ++c) counts[c] += other.counts[c];
    for (size_t b = 0; b < bins.size(); ++b) bins[b] += other.bins[b];
    ppt_checked += other.ppt_checked;
    ppt_mismatches += other.ppt_mismatches;
  }
};

void run_chunk(const SurveyOptions& options, std::int64_t chunk,
               Partial& out) {
  const std::int64_t begin = chunk * options.chunk_size;
  const std::int64_t end =
      std::min(options.samples, begin + options.chunk_size);
  Rng rng(stream_seed(options.seed, static_cast<std::uint64_t>(chunk)));
  const double width = kHistogramTop / options.bins;
  for (std::int64_t i = begin; i < end; ++i) {
    const std::vector<double> w = sample_simplex(8, rng);
    const PairedSpectrum spectrum = PairedSpectrum::canonical(w, 3);
    const DistillabilityReport report = classify(spectrum);
    ++out.counts[static_cast<int>(report.category)];
    const int bin = std::min(options.bins - 1,
                             static_cast<int>(report.mermin_value / width));
    ++out.bins[bin];
    if (options.cross_check_ppt && !report.distillable) {
      const DensityMatrix rho = spectrum.state();
      ++out.ppt_checked;
      for (int cut = 0; cut < 3; ++cut) {
        const bool positive =
            min_eigenvalue(partial_transpose(rho, cut)) >= -1e-12;
        if (positive != report.ppt[cut]) {
          ++out.ppt_mismatches;
          break;
        }
      }
    }
  }
}

}  // namespace

SurveyStats survey(const SurveyOptions& options) {
  if (options.samples < 1 || options.bins < 1 || options.workers < 1 ||
      options.chunk_size < 1) {
    fail(ErrorCode::kOutOfRange,
         "survey needs samples, bins, workers and chunk size >= 1");
  }
  const std::int64_t chunks =
      (options.samples + options.chunk_size - 1) / options.chunk_size;
  const int workers = static_cast<int>(
      std::min<std::int64_t>(options.workers, chunks));

  std::vector<Partial> partials(workers);
  for (Partial& p : partials) p.bins.assign(options.bins, 0);
  auto work = [&](int worker) {
    for (std::int64_t c = worker; c < chunks; c += workers) {
      run_chunk(options, c, partials[worker]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  Partial total;
  total.bins.assign(options.bins, 0);
  for (const Partial& p : partials) total.merge(p);

  SurveyStats stats;
  stats.n_samples = options.samples;
  stats.seed = options.seed;
  stats.counts = total.counts;
  for (int c = 0; c < 4; ++c) {
    stats.category_probs[c] =
        static_cast<double>(total.counts[c]) / options.samples;
  }
  stats.bin_width = kHistogramTop / options.bins;
  stats.bin_counts = total.bins;
  stats.density.resize(options.bins);
  for (int b = 0; b < options.bins; ++b) {
    stats.density[b] = static_cast<double>(total.bins[b]) /
                       (static_cast<double>(options.samples) * stats.bin_width);
  }
  stats.ppt_checked = total.ppt_checked;
  stats.ppt_mismatches = total.ppt_mismatches;
  return stats;
}

}  // namespace bellmax
