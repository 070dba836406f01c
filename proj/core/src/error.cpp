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

#include "tforge/error.hpp"

namespace tforge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kResolverUnavailable: return "ResolverUnavailable";
    case ErrorCode::kBackendError: return "BackendError";
    case ErrorCode::kBackendUnavailable: return "BackendUnavailable";
    case ErrorCode::kScorerUnavailable: return "ScorerUnavailable";
    case ErrorCode::kProtocol: return "ProtocolError";
    case ErrorCode::kInsufficientRecords: return "InsufficientRecords";
    case ErrorCode::kTooFewRecords: return "TooFewRecords";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptySide: return "EmptySide";
    case ErrorCode::kRowMisalignment: return "RowMisalignment";
    case ErrorCode::kTooFewSamples: return "TooFewSamples";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kConfig: return "ConfigError";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      message_(message) {}

}  // namespace tforge
