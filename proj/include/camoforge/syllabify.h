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

#ifndef CAMOFORGE_SYLLABIFY_H_
#define CAMOFORGE_SYLLABIFY_H_

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace camoforge {

// Liang hyphenation patterns in the LibreOffice `hyph_*.dic` dialect:
// first line is the encoding (only UTF-8 is accepted), '%' and '#' start
// comments, upper-case directive lines (LEFTHYPHENMIN, NEXTLEVEL, ...) are
// skipped and all pattern levels are merged. Non-standard patterns
// (`pattern/change,index,cut`) are ignored.
class HyphenationPatterns {
 public:
  static HyphenationPatterns Parse(std::string_view contents);
  static HyphenationPatterns LoadFile(const std::string& path);

  // Offsets k with 0 < k < word.size() where a break may fall between
  // word[k-1] and word[k]. Breaks closer than `left_min` to the start or
  // `right_min` to the end are dropped.
  std::vector<size_t> BreakPoints(std::u32string_view word, size_t left_min,
                                  size_t right_min) const;

  size_t size() const { return patterns_.size(); }

 private:
  struct Pattern {
    size_t offset;
    std::vector<uint8_t> values;
  };

  std::unordered_map<std::u32string, Pattern> patterns_;
  size_t max_length_ = 0;
};

// Splits words into syllables for one language.
//
// Pattern-backed when hyphenation patterns are available, otherwise a
// vowel-nucleus heuristic with maximal onsets. Apostrophes and hyphens always
// end a syllable. Immutable; safe to share across threads.
class Syllabifier {
 public:
  Syllabifier(std::string language,
              std::shared_ptr<const HyphenationPatterns> patterns,
              size_t left_min = 2, size_t right_min = 2);

  static Syllabifier Heuristic(std::string language = "");
  // Bundled patterns for en/es/fr/it/de (cached after first load). Other
  // languages, or a missing pattern file, get the heuristic.
  static Syllabifier ForLanguage(std::string_view language);

  // Concatenating the result always reproduces `word`. Words that are not
  // mostly letters come back as a single element.
  std::vector<std::u32string> Split(std::u32string_view word) const;
  std::vector<std::string> Split(std::string_view word) const;

  // Interior syllable boundaries as scalar offsets, ascending.
  std::vector<size_t> Boundaries(std::u32string_view word) const;

  const std::string& language() const { return language_; }
  bool uses_patterns() const { return patterns_ != nullptr; }

 private:
  std::vector<size_t> AlphaBoundaries(std::u32string_view run) const;

  std::string language_;
  std::shared_ptr<const HyphenationPatterns> patterns_;
  size_t left_min_;
  size_t right_min_;
};

}  // namespace camoforge

#endif  // CAMOFORGE_SYLLABIFY_H_
