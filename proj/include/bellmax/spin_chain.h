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

#ifndef BELLMAX_SPIN_CHAIN_H_
#define BELLMAX_SPIN_CHAIN_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bellmax/qstate.h"

namespace bellmax {

// Two-site correlators <sigma_u (x) sigma_v> of a chain state with only
// the xx, yy, zz and (symmetric) xy channels present.
struct CorrelatorTensor2 {
  double t_xx = 0.0;
  double t_yy = 0.0;
  double t_zz = 0.0;
  double t_xy = 0.0;
};

// Full three-site tensor T[u][v][w] = <sigma_u (x) sigma_v (x) sigma_w>,
// indices 0 = I, 1 = x, 2 = y, 3 = z; T[0][0][0] = 1.
using FullTensor3 = std::array<double, 64>;

struct CorrelatorTensor3 {
  double t_zzz = 0.0;
  double t_zxx = 0.0;
  double t_xzx = 0.0;
  double t_xxz = 0.0;
  std::optional<FullTensor3> full;
};

inline int tensor3_index(int u, int v, int w) { return 16 * u + 4 * v + w; }

// (1/4)[I + T_xx XX + T_yy YY + T_zz ZZ + T_xy (XY + YX)].
// NotAState when an entry leaves [-1, 1] or the matrix is not a state.
DensityMatrix state_from_correlators2(const CorrelatorTensor2& t);
CorrelatorTensor2 correlators_from_state2(const DensityMatrix& rho);

// (1/8) sum_uvw T_uvw sigma_u (x) sigma_v (x) sigma_w. Needs the full
// tensor (NotAState without it or when the result is not a state).
DensityMatrix state_from_correlators3(const CorrelatorTensor3& t);
CorrelatorTensor3 correlators_from_state3(const DensityMatrix& rho);

// 2 sqrt(T_xx^2 + T_yy^2 + T_zz^2 - min(T_xx^2, T_yy^2, T_zz^2)
//        + 2 T_xy^2). NotAState for unphysical tensors.
double chsh_max_from_correlators(const CorrelatorTensor2& t);

// sqrt(4 T_zzz^2 + 4 T_zxx^2 + 4 T_xzx^2 + 4 T_xxz^2), an upper bound on
// the Mermin maximum of chain states of this symmetry class.
double mermin_bound_from_correlators(const CorrelatorTensor3& t);

struct CorrelatorRow2 {
  std::string site_config;
  CorrelatorTensor2 tensor;
};

struct CorrelatorRow3 {
  std::string site_config;
  CorrelatorTensor3 tensor;
};

// CSV with header site_config,T_xx,T_yy,T_zz,T_xy (two sites) or
// site_config,T_zzz,T_zxx,T_xzx,T_xxz (three sites). SchemaMismatch lists
// the missing and unexpected columns; ParseError names bad cells.
std::vector<CorrelatorRow2> parse_correlators2(std::string_view csv_text);
std::vector<CorrelatorRow3> parse_correlators3(std::string_view csv_text);

}  // namespace bellmax

#endif  // BELLMAX_SPIN_CHAIN_H_
