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

#ifndef BELLMAX_SURVEY_H_
#define BELLMAX_SURVEY_H_

#include <array>
#include <cstdint>
#include <vector>

namespace bellmax {

struct SurveyOptions {
  std::int64_t samples = 1000000;
  std::uint64_t seed = 0xB311;
  int bins = 100;
  int workers = 1;
  // Samples per RNG stream. Part of the result's identity: changing it
  // changes which numbers are drawn.
  std::int64_t chunk_size = 1 << 16;
  // Re-derive every PPT flag of samples with at least one PPT cut from the
  // eigenvalues of the explicit partial transpose.
  bool cross_check_ppt = false;
};

struct SurveyStats {
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
  // Indexed by DistillabilityCategory.
  std::array<std::int64_t, 4> counts{};
  std::array<double, 4> category_probs{};
  // Uniform bins of the Mermin bound over [0, 4].
  double bin_width = 0.0;
  std::vector<std::int64_t> bin_counts;
  std::vector<double> density;
  std::int64_t ppt_checked = 0;
  std::int64_t ppt_mismatches = 0;
};

// Samples three-qubit GHZ-diagonal spectra uniformly from the 8-simplex,
// puts each in canonical (sorted) form and classifies it. Chunk c draws
// from stream_seed(seed, c); chunk statistics are integer counts, so the
// result is identical for any worker count. OutOfRange for samples < 1,
// bins < 1, workers < 1 or chunk_size < 1.
SurveyStats survey(const SurveyOptions& options);

}  // namespace bellmax

#endif  // BELLMAX_SURVEY_H_
