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

#ifndef BELLMAX_ERRORS_H_
#define BELLMAX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace bellmax {

// Every failure the library reports carries one of these codes. The CLI maps
// each code to a distinct process exit status (see exit_status()).
enum class ErrorCode {
  kNotHermitian = 1,
  kNotUnitTrace,
  kNotPsd,
  kDimensionMismatch,
  kWrongPartyCount,
  kBadSpectrum,
  kOutOfRange,
  kNotNormalized,
  kNotOrthogonal,
  kNotAState,
  kBadPartyIndex,
  kBadPartyCount,
  kNoConvergence,
  kNotBellDiagonal,
  kSchemaMismatch,
  kParseError,
  kIoError,
};

const char* error_code_name(ErrorCode code);

// Exit status used by the command-line tool: 10 + the numeric code.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace bellmax

#endif  // BELLMAX_ERRORS_H_
