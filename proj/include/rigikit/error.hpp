// Copyright 2026 The rigikit Authors.
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

#ifndef RIGIKIT_ERROR_HPP_
#define RIGIKIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rigikit {

// Stable, machine-readable error codes. The names are part of the service
// contract and are emitted verbatim in error payloads.
enum class ErrorCode {
  kSyntaxError,
  kUnknownSymbol,
  kDivisionByZero,
  kExactUnsupported,
  kDomainError,
  kModeMismatch,
  kLoopEdge,
  kUnknownVertex,
  kUnknownEdge,
  kParameterRange,
  kDimensionMismatch,
  kMissingVertex,
  kShapeMismatch,
  kGraphMismatch,
  kUnsupportedCase,
  kAlgorithmDimMismatch,
  kVertexExists,
  kBadBaseSet,
  kBadRemovedSet,
  kUnknownName,
  kBadParams,
  kNotAPartition,
  kNotAMotion,
  kBaseMismatch,
  kNotFlexible,
  kCorrectorDiverged,
  kFlexIndexOutOfRange,
  kUnboundedInterval,
  kUnsupportedDimension,
  kSchemaError,
  kTimeout,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  std::string_view code_name() const { return ErrorCodeName(code_); }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace rigikit

#endif  // RIGIKIT_ERROR_HPP_
