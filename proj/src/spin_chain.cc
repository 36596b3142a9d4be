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

#include "bellmax/spin_chain.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "bellmax/csv.h"
#include "bellmax/errors.h"

namespace bellmax {
namespace {

void check_entry(double v, const char* name) {
  if (!(v >= -1.0 - 1e-12 && v <= 1.0 + 1e-12)) {
    fail(ErrorCode::kNotAState, std::string(name) + " = " + format_number(v) +
                                    " outside [-1, 1]");
  }
}

DensityMatrix as_state(const ComplexMatrix& m) {
  try {
    return make_density(m);
  } catch (const Error& e) {
    fail(ErrorCode::kNotAState,
         std::string("correlators do not describe a state: ") + e.what());
  }
}

void check_schema(const CsvTable& table,
                  const std::vector<std::string>& expected) {
  std::string missing;
  std::string unexpected;
  for (const std::string& name : expected) {
    if (table.column(name) < 0) missing += (missing.empty() ? "" : ",") + name;
  }
  for (const std::string& name : table.header) {
    if (std::find(expected.begin(), expected.end(), name) == expected.end()) {
      unexpected += (unexpected.empty() ? "" : ",") + name;
    }
  }
  if (!missing.empty() || !unexpected.empty()) {
    std::string expected_header;
    for (const std::string& name : expected) {
      expected_header += (expected_header.empty() ? "" : ",") + name;
    }
    fail(ErrorCode::kSchemaMismatch,
         "expected columns " + expected_header + "; missing [" + missing +
             "], unexpected [" + unexpected + "]");
  }
}

}  // namespace

DensityMatrix state_from_correlators2(const CorrelatorTensor2& t) {
  check_entry(t.t_xx, "T_xx");
  check_entry(t.t_yy, "T_yy");
  check_entry(t.t_zz, "T_zz");
  check_entry(t.t_xy, "T_xy");
  const ComplexMatrix x = pauli(1);
  const ComplexMatrix y = pauli(2);
  const ComplexMatrix z = pauli(3);
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m += t.t_xx * kron(x, x) + t.t_yy * kron(y, y) + t.t_zz * kron(z, z) +
       t.t_xy * (kron(x, y) + kron(y, x));
  return as_state(m / 4.0);
}

CorrelatorTensor2 correlators_from_state2(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    fail(ErrorCode::kDimensionMismatch,
         "two-site state expected, dim " + std::to_string(rho.dim()));
  }
  auto corr = [&](int u, int v) {
    return (rho.matrix() * kron(pauli(u), pauli(v))).trace().real();
  };
  return {corr(1, 1), corr(2, 2), corr(3, 3), 0.5 * (corr(1, 2) + corr(2, 1))};
}

DensityMatrix state_from_correlators3(const CorrelatorTensor3& t) {
  if (!t.full) {
    fail(ErrorCode::kNotAState,
         "three-site reconstruction needs the full correlator tensor");
  }
  const FullTensor3& full = *t.full;
  ComplexMatrix m = ComplexMatrix::Zero(8, 8);
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      for (int w = 0; w < 4; ++w) {
        const double c = full[tensor3_index(u, v, w)];
        if (c == 0.0) continue;
        check_entry(c, "T_uvw");
        m += c * kron(kron(pauli(u), pauli(v)), pauli(w));
      }
    }
  }
  return as_state(m / 8.0);
}

CorrelatorTensor3 correlators_from_state3(const DensityMatrix& rho) {
  if (rho.dim() != 8) {
    fail(ErrorCode::kDimensionMismatch,
         "three-site state expected, dim " + std::to_string(rho.dim()));
  }
  FullTensor3 full{};
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      for (int w = 0; w < 4; ++w) {
        full[tensor3_index(u, v, w)] =
            (rho.matrix() * kron(kron(pauli(u), pauli(v)), pauli(w)))
                .trace()
                .real();
      }
    }
  }
  CorrelatorTensor3 t;
  t.t_zzz = full[tensor3_index(3, 3, 3)];
  t.t_zxx = full[tensor3_index(3, 1, 1)];
  t.t_xzx = full[tensor3_index(1, 3, 1)];
  t.t_xxz = full[tensor3_index(1, 1, 3)];
  t.full = full;
  return t;
}

double chsh_max_from_correlators(const CorrelatorTensor2& t) {
  state_from_correlators2(t);
  const double xx = t.t_xx * t.t_xx;
  const double yy = t.t_yy * t.t_yy;
  const double zz = t.t_zz * t.t_zz;
  return 2.0 * std::sqrt(xx + yy + zz - std::min({xx, yy, zz}) +
                         2.0 * t.t_xy * t.t_xy);
}

double mermin_bound_from_correlators(const CorrelatorTensor3& t) {
  return 2.0 * std::sqrt(t.t_zzz * t.t_zzz + t.t_zxx * t.t_zxx +
                         t.t_xzx * t.t_xzx + t.t_xxz * t.t_xxz);
}

std::vector<CorrelatorRow2> parse_correlators2(std::string_view csv_text) {
  const CsvTable table = parse_csv(csv_text);
  check_schema(table, {"site_config", "T_xx", "T_yy", "T_zz", "T_xy"});
  const int c_xx = table.column("T_xx");
  const int c_yy = table.column("T_yy");
  const int c_zz = table.column("T_zz");
  const int c_xy = table.column("T_xy");
  const int c_cfg = table.column("site_config");
  std::vector<CorrelatorRow2> rows;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string ctx = "row " + std::to_string(r + 2);
    rows.push_back({row[c_cfg],
                    {parse_number(row[c_xx], ctx + " T_xx"),
                     parse_number(row[c_yy], ctx + " T_yy"),
                     parse_number(row[c_zz], ctx + " T_zz"),
                     parse_number(row[c_xy], ctx + " T_xy")}});
  }
  return rows;
}

std::vector<CorrelatorRow3> parse_correlators3(std::string_view csv_text) {
  const CsvTable table = parse_csv(csv_text);
  check_schema(table, {"site_config", "T_zzz", "T_zxx", "T_xzx", "T_xxz"});
  const int c_cfg = table.column("site_config");
  std::vector<CorrelatorRow3> rows;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string ctx = "row " + std::to_string(r + 2);
    CorrelatorTensor3 t;
    t.t_zzz = parse_number(row[table.column("T_zzz")], ctx + " T_zzz");
    t.t_zxx = parse_number(row[table.column("T_zxx")], ctx + " T_zxx");
    t.t_xzx = parse_number(row[table.column("T_xzx")], ctx + " T_xzx");
    t.t_xxz = parse_number(row[table.column("T_xxz")], ctx + " T_xxz");
    rows.push_back({row[c_cfg], t});
  }
  return rows;
}

}  // namespace bellmax
