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

#include "camoforge/data_paths.h"

#include <cctype>
#include <cstdlib>
#include <mutex>

#ifndef CAMOFORGE_DEFAULT_DATA_DIR
#define CAMOFORGE_DEFAULT_DATA_DIR "data"
#endif

namespace camoforge {
namespace {

std::mutex& DirMutex() {
  static std::mutex mu;
  return mu;
}

std::string& OverrideDir() {
  static std::string dir;
  return dir;
}

}  // namespace

std::string DataDir() {
  {
    std::lock_guard<std::mutex> lock(DirMutex());
    if (!OverrideDir().empty()) return OverrideDir();
  }
  if (const char* env = std::getenv("CAMOFORGE_DATA_DIR"); env && *env) {
    return env;
  }
  return CAMOFORGE_DEFAULT_DATA_DIR;
}

void SetDataDir(std::string dir) {
  std::lock_guard<std::mutex> lock(DirMutex());
  OverrideDir() = std::move(dir);
}

std::string NormalizeLanguage(std::string_view language) {
  std::string out;
  for (char c : language) {
    if (c == '_' || c == '-') break;
    out.push_back(
        static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace camoforge
