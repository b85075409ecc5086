// Copyright 2026 The TopicForge Authors.
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

#ifndef TOPICFORGE_ERROR_H_
#define TOPICFORGE_ERROR_H_

#include <stdexcept>
#include <string>

namespace topicforge {

enum class ErrorCode {
  kInvalidArgument,
  kFileNotFound,
  kMalformedCsv,
  kMissingColumn,
  kMalformedInput,
  kEmptyVocabulary,
  kInvalidK,
  kNotRawCount,
  kIndexOutOfRange,
  kLengthMismatch,
  kNotStochastic,
  kUnknownTerm,
  kVocabularyMismatch,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above. The
// message names the offending input (file, row, column, term, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace topicforge

#endif  // TOPICFORGE_ERROR_H_
