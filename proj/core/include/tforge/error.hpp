// Copyright 2026 The TripletForge Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace tforge {

// Error categories surfaced by the pipeline and harness. Each stage documents
// which of these it raises; the CLI maps any of them to exit status 1.
enum class ErrorCode {
  kMalformedInput,
  kIo,
  kEmptyCorpus,
  kResolverUnavailable,
  kBackendError,
  kBackendUnavailable,
  kScorerUnavailable,
  kProtocol,
  kInsufficientRecords,
  kTooFewRecords,
  kDimensionMismatch,
  kEmptySide,
  kRowMisalignment,
  kTooFewSamples,
  kInvalidArgument,
  kConfig,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // what() without the "Name: " prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace tforge
