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

#ifndef BELLMAX_STATE_IO_H_
#define BELLMAX_STATE_IO_H_

#include <string>
#include <string_view>

#include "bellmax/qstate.h"

namespace bellmax {

// Density-matrix JSON: {"dim": d, "re": [[...]], "im": [[...]]}, row-major,
// d rows of d numbers each in both "re" and "im".
DensityMatrix parse_density_json(std::string_view text);
std::string density_to_json(const DensityMatrix& rho);

DensityMatrix read_density_file(const std::string& path);
void write_density_file(const DensityMatrix& rho, const std::string& path);

}  // namespace bellmax

#endif  // BELLMAX_STATE_IO_H_
