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

#include "rigikit/error.hpp"

namespace rigikit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kExactUnsupported: return "ExactUnsupported";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kModeMismatch: return "ModeMismatch";
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kParameterRange: return "ParameterRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kMissingVertex: return "MissingVertex";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kGraphMismatch: return "GraphMismatch";
    case ErrorCode::kUnsupportedCase: return "UnsupportedCase";
    case ErrorCode::kAlgorithmDimMismatch: return "AlgorithmDimMismatch";
    case ErrorCode::kVertexExists: return "VertexExists";
    case ErrorCode::kBadBaseSet: return "BadBaseSet";
    case ErrorCode::kBadRemovedSet: return "BadRemovedSet";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kNotAPartition: return "NotAPartition";
    case ErrorCode::kNotAMotion: return "NotAMotion";
    case ErrorCode::kBaseMismatch: return "BaseMismatch";
    case ErrorCode::kNotFlexible: return "NotFlexible";
    case ErrorCode::kCorrectorDiverged: return "CorrectorDiverged";
    case ErrorCode::kFlexIndexOutOfRange: return "FlexIndexOutOfRange";
    case ErrorCode::kUnboundedInterval: return "UnboundedInterval";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kTimeout: return "timeout";
  }
  return "Unknown";
}

}  // namespace rigikit
