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

#include "bellmax/errors.h"

namespace bellmax {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotUnitTrace: return "NotUnitTrace";
    case ErrorCode::kNotPsd: return "NotPSD";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kWrongPartyCount: return "WrongPartyCount";
    case ErrorCode::kBadSpectrum: return "BadSpectrum";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kNotOrthogonal: return "NotOrthogonal";
    case ErrorCode::kNotAState: return "NotAState";
    case ErrorCode::kBadPartyIndex: return "BadPartyIndex";
    case ErrorCode::kBadPartyCount: return "BadPartyCount";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kNotBellDiagonal: return "NotBellDiagonal";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) { return 10 + static_cast<int>(code); }

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace bellmax
