// Copyright 2026 The opint authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPINT_ERROR_HPP
#define OPINT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace opint {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kNotNormal,
  kNoConvergence,
  kDimensionMismatch,
  kMissingDerivative,
  kNotTorusFunction,
  kDegreeTooHigh,
  kTruncationInsufficient,
  kSupportNotCovered,
  kRegimeMismatch,
  kConstraintViolated,
  kUnsupportedRepresentation,
  kMissingFactorization,
  kInternal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace opint

#endif  // OPINT_ERROR_HPP
