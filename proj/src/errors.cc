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

#include "camoforge/errors.h"

namespace camoforge {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
    case ErrorCode::kInvalidConfig:
      return "INVALID_CONFIG";
    case ErrorCode::kParse:
      return "PARSE";
    case ErrorCode::kIo:
      return "IO";
    case ErrorCode::kAlignment:
      return "ALIGNMENT";
    case ErrorCode::kScheme:
      return "SCHEME";
    case ErrorCode::kInvariant:
      return "INVARIANT";
  }
  return "UNKNOWN";
}

}  // namespace camoforge
