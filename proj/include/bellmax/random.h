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

#ifndef BELLMAX_RANDOM_H_
#define BELLMAX_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

namespace bellmax {

// splitmix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Seed of stream `index` under a master seed. Streams are what keep
// parallel work reproducible: results depend on (seed, index), never on
// which worker ran the stream.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Unit-rate exponential.
  double exponential();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// A uniform point of the (dim-1)-simplex: dim unit exponentials divided by
// their sum. Requires dim >= 2.
std::vector<double> sample_simplex(int dim, Rng& rng);

}  // namespace bellmax

#endif  // BELLMAX_RANDOM_H_
