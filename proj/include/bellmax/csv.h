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

#ifndef BELLMAX_CSV_H_
#define BELLMAX_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace bellmax {

// 9 significant digits, '.' decimal point regardless of locale.
std::string format_number(double value);

// Parses a full decimal number; ParseError mentions `context` on failure.
double parse_number(std::string_view text, std::string_view context);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column, or -1.
  int column(std::string_view name) const;
};

// Plain comma-separated values with a header row; no quoting. Rows whose
// field count differs from the header raise ParseError naming the line.
CsvTable parse_csv(std::string_view text);
std::string to_csv(const CsvTable& table);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace bellmax

#endif  // BELLMAX_CSV_H_
