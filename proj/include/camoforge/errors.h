//
// Copyright 2026 The Camoforge Authors
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
//

#ifndef CAMOFORGE_ERRORS_H_
#define CAMOFORGE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace camoforge {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidConfig,
  kParse,
  kIo,
  // A span does not line up with token boundaries, or gold/pred texts differ.
  kAlignment,
  // A tag sequence is not valid under its tagging scheme.
  kScheme,
  kInvariant,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by the tagging-scheme code. `index` is the token index for kScheme
// and the scalar offset of the offending span start for kAlignment.
class TaggingError : public Error {
 public:
  TaggingError(ErrorCode code, long index, const std::string& message)
      : Error(code, message), index_(index) {}
  long index() const { return index_; }

 private:
  long index_;
};

}  // namespace camoforge

#endif  // CAMOFORGE_ERRORS_H_
