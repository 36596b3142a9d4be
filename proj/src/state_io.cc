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

#include "bellmax/state_io.h"

#include <complex>

#include "bellmax/csv.h"
#include "bellmax/errors.h"
#include "json.hpp"

namespace bellmax {
namespace {

using nlohmann::json;

void read_part(const json& doc, const char* key, int dim, ComplexMatrix& m,
               bool imaginary) {
  if (!doc.contains(key)) {
    fail(ErrorCode::kParseError, std::string("missing \"") + key + "\"");
  }
  const json& rows = doc.at(key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    fail(ErrorCode::kParseError, std::string("\"") + key + "\" must have " +
                                     std::to_string(dim) + " rows");
  }
  for (int i = 0; i < dim; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      fail(ErrorCode::kParseError, std::string("\"") + key + "\" row " +
                                       std::to_string(i) + " must have " +
                                       std::to_string(dim) + " numbers");
    }
    for (int j = 0; j < dim; ++j) {
      if (!row[j].is_number()) {
        fail(ErrorCode::kParseError, std::string("\"") + key + "\"[" +
                                         std::to_string(i) + "][" +
                                         std::to_string(j) +
                                         "] is not a number");
      }
      const double v = row[j].get<double>();
      if (imaginary) {
        m(i, j).imag(v);
      } else {
        m(i, j).real(v);
      }
    }
  }
}

}  // namespace

DensityMatrix parse_density_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") ||
      !doc.at("dim").is_number_integer()) {
    fail(ErrorCode::kParseError, "state JSON needs an integer \"dim\"");
  }
  const int dim = doc.at("dim").get<int>();
  if (dim < 2 || dim > 1 << 12) {
    fail(ErrorCode::kDimensionMismatch, "dim " + std::to_string(dim));
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  read_part(doc, "re", dim, m, false);
  read_part(doc, "im", dim, m, true);
  return make_density(m);
}

std::string density_to_json(const DensityMatrix& rho) {
  const int d = rho.dim();
  json re = json::array();
  json im = json::array();
  for (int i = 0; i < d; ++i) {
    json rr = json::array();
    json ii = json::array();
    for (int j = 0; j < d; ++j) {
      rr.push_back(rho.matrix()(i, j).real());
      ii.push_back(rho.matrix()(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  json doc = {{"dim", d}, {"re", re}, {"im", im}};
  return doc.dump() + "\n";
}

DensityMatrix read_density_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_density_json(text);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) {
      fail(ErrorCode::kParseError, path + ": " + e.what());
    }
    throw;
  }
}

void write_density_file(const DensityMatrix& rho, const std::string& path) {
  write_text_file(path, density_to_json(rho));
}

}  // namespace bellmax
