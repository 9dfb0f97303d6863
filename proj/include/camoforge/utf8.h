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

#ifndef CAMOFORGE_UTF8_H_
#define CAMOFORGE_UTF8_H_

#include <string>
#include <string_view>

namespace camoforge {

// All offsets exposed by the library count Unicode scalar values, so most
// text handling goes through std::u32string.

// Decodes UTF-8. Malformed sequences decode to U+FFFD, one per bad byte.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t c, std::string* out);

// Number of scalar values in a UTF-8 string.
size_t ScalarLength(std::string_view text);

// Latin, Greek and Cyrillic letters. Anything outside those scripts is
// treated as a non-letter.
bool IsLetter(char32_t c);
bool IsDigit(char32_t c);
bool IsSpace(char32_t c);
// ASCII punctuation plus the common Latin-1 / General Punctuation marks
// (inverted marks, guillemets, curly quotes, dashes, ellipsis).
bool IsPunctuation(char32_t c);
bool IsUpper(char32_t c);

char32_t ToLower(char32_t c);
std::u32string ToLower(std::u32string_view text);
std::string ToLowerUtf8(std::string_view text);

}  // namespace camoforge

#endif  // CAMOFORGE_UTF8_H_
