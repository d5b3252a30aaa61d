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

#ifndef RUBRIQ_ERROR_H_
#define RUBRIQ_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rubriq {

// Every failure raised by the library carries one of these codes. Callers
// branch on code(); the message is for humans.
enum class ErrorCode {
  // corpus model
  kEmptyDocument,
  kMissingLevelDescriptors,
  kDuplicateCriterionCode,
  kUnknownElement,
  kMalformedRubric,
  // completion backends
  kAuth,
  kRateLimited,
  kTransport,
  kMalformedResponse,
  kBudgetExceeded,
  kRequestRejected,
  // review pipeline
  kBudgetUnreachable,
  kRatingUnparseable,
  kPrecondition,
  // sentiment
  kMalformedLine,
  kValenceOutOfRange,
  // numerics
  kDegenerateInput,
  kInsufficientData,
  // storage
  kIo,
  kSerialization,
  kMissingFile,
  kFormatVersionMismatch,
  kValidationFailed,
  // configuration
  kConfig,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rubriq

#endif  // RUBRIQ_ERROR_H_
