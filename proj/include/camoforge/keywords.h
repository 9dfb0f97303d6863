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

#ifndef CAMOFORGE_KEYWORDS_H_
#define CAMOFORGE_KEYWORDS_H_

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace camoforge {

struct KeywordRequest {
  std::string text;
  // Cap on distinct scored keywords. Forced keywords do not count against it.
  int max_keywords = 5;
  std::vector<std::string> forced_keywords;
  std::string language = "en";
};

// One occurrence of a selected keyword. Offsets are half-open scalar
// offsets into the request text.
struct KeywordHit {
  std::string surface;
  size_t start = 0;
  size_t end = 0;
  double score = 0.0;
  bool forced = false;
};

// Word-frequency ranks, `word<TAB>rank` per line ('#' comments allowed).
class FrequencyList {
 public:
  static FrequencyList Parse(std::string_view contents);
  static FrequencyList LoadFile(const std::string& path);

  // 1-based rank of a lowercase word, 0 if unknown.
  size_t Rank(const std::string& word) const;
  size_t size() const { return ranks_.size(); }
  size_t max_rank() const { return max_rank_; }

 private:
  std::unordered_map<std::string, size_t> ranks_;
  size_t max_rank_ = 0;
};

// Everything a language needs for keyword scoring.
struct LanguageResources {
  std::string language;
  FrequencyList frequencies;
  std::unordered_set<std::string> stopwords;

  // Bundled resources from the data directory, cached per language. Missing
  // files yield empty lists (every word scores as rare, nothing is a
  // stopword).
  static std::shared_ptr<const LanguageResources> ForLanguage(
      std::string_view language);
};

// Candidate tokens are maximal runs of characters that are neither
// whitespace nor punctuation; a candidate is eligible when it is all letters,
// at least 3 long and not a stopword.
struct Token {
  size_t start;
  size_t end;
};
std::vector<Token> CandidateTokens(std::u32string_view text);

class KeywordExtractor {
 public:
  virtual ~KeywordExtractor() = default;
  // Hits sorted by start, non-overlapping. Every occurrence of a selected
  // keyword is a hit.
  virtual std::vector<KeywordHit> Extract(const KeywordRequest& req) const = 0;
};

// Term frequency times inverse frequency rank: idf = ln(1 + rank), unknown
// words get the rank just past the end of the list. Scores are normalized so
// the best candidate scores 1. Ties go to the earlier first occurrence.
class TfIdfExtractor : public KeywordExtractor {
 public:
  TfIdfExtractor() = default;
  // Pins the resources instead of looking them up by request language.
  explicit TfIdfExtractor(std::shared_ptr<const LanguageResources> resources)
      : resources_(std::move(resources)) {}

  std::vector<KeywordHit> Extract(const KeywordRequest& req) const override;

 private:
  std::shared_ptr<const LanguageResources> resources_;
};

// TfIdfExtractor with the bundled resources for req.language.
std::vector<KeywordHit> ExtractKeywords(const KeywordRequest& req);

}  // namespace camoforge

#endif  // CAMOFORGE_KEYWORDS_H_
