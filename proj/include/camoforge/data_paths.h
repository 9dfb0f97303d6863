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

#ifndef CAMOFORGE_DATA_PATHS_H_
#define CAMOFORGE_DATA_PATHS_H_

#include <string>
#include <string_view>

namespace camoforge {

// Root of the bundled data (hyphenation/, frequency/, stopwords/).
// Resolution order: the value given to SetDataDir(), the CAMOFORGE_DATA_DIR
// environment variable, then the directory baked in at build time.
std::string DataDir();
void SetDataDir(std::string dir);

// "en", "EN", "en_GB" and "en-US" all normalize to "en".
std::string NormalizeLanguage(std::string_view language);

}  // namespace camoforge

#endif  // CAMOFORGE_DATA_PATHS_H_
