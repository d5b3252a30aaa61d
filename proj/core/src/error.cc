// Copyright 2026 The Rubriq Authors.
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

#include "rubriq/error.h"

namespace rubriq {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kMissingLevelDescriptors: return "MissingLevelDescriptors";
    case ErrorCode::kDuplicateCriterionCode: return "DuplicateCriterionCode";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kMalformedRubric: return "MalformedRubric";
    case ErrorCode::kAuth: return "AuthError";
    case ErrorCode::kRateLimited: return "RateLimited";
    case ErrorCode::kTransport: return "Transport";
    case ErrorCode::kMalformedResponse: return "MalformedResponse";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kRequestRejected: return "RequestRejected";
    case ErrorCode::kBudgetUnreachable: return "BudgetUnreachable";
    case ErrorCode::kRatingUnparseable: return "RatingUnparseable";
    case ErrorCode::kPrecondition: return "PreconditionViolation";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kValenceOutOfRange: return "ValenceOutOfRange";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kSerialization: return "SerializationError";
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kFormatVersionMismatch: return "FormatVersionMismatch";
    case ErrorCode::kValidationFailed: return "ValidationFailed";
    case ErrorCode::kConfig: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace rubriq
