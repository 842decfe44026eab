// Copyright 2026 The Semmem Authors.
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

#ifndef SEMMEM_ERROR_HPP_
#define SEMMEM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace semmem {

enum class ErrorCode {
  kNotFound,
  kParse,
  kInvalidArgument,
  kDegenerateLabels,
  kEmptyDocument,
  kEmptyReferenceCorpus,
  kAlreadyKnown,
  kExhausted,
  kCorruptLog,
  kNumeric,
  kIo,
  kConflict,
};

// Stable machine-readable name, used in the HTTP error envelope and CLI.
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDegenerateLabels: return "DegenerateLabels";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kEmptyReferenceCorpus: return "EmptyReferenceCorpus";
    case ErrorCode::kAlreadyKnown: return "AlreadyKnown";
    case ErrorCode::kExhausted: return "Exhausted";
    case ErrorCode::kCorruptLog: return "CorruptLog";
    case ErrorCode::kNumeric: return "NumericError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kConflict: return "Conflict";
  }
  return "Unknown";
}

}  // namespace semmem

#endif  // SEMMEM_ERROR_HPP_
