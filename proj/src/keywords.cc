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

#include "camoforge/keywords.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "camoforge/data_paths.h"
#include "camoforge/errors.h"
#include "camoforge/utf8.h"

namespace camoforge {
namespace {

constexpr size_t kMinKeywordLength = 3;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename Fn>
void ForEachLine(std::string_view contents, Fn fn) {
  size_t pos = 0;
  size_t line_no = 0;
  while (pos < contents.size()) {
    size_t eol = contents.find('\n', pos);
    if (eol == std::string_view::npos) eol = contents.size();
    std::string_view line = contents.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    fn(line, line_no);
  }
}

bool AllLetters(std::u32string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char32_t c) { return IsLetter(c); });
}

struct Candidate {
  std::string term;  // lowercase
  size_t first = 0;  // index of first occurrence in token order
  int count = 0;
  double score = 0.0;
};

}  // namespace

FrequencyList FrequencyList::Parse(std::string_view contents) {
  FrequencyList list;
  ForEachLine(contents, [&](std::string_view line, size_t line_no) {
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "frequency list line " +
                                         std::to_string(line_no) +
                                         ": expected word<TAB>rank");
    }
    const std::string word = ToLowerUtf8(line.substr(0, tab));
    size_t rank = 0;
    try {
      rank = std::stoul(std::string(line.substr(tab + 1)));
    } catch (const std::exception&) {
      throw Error(
          ErrorCode::kParse,
          "frequency list line " + std::to_string(line_no) + ": bad rank");
    }
    if (rank == 0) {
      throw Error(ErrorCode::kParse, "frequency list line " +
                                         std::to_string(line_no) +
                                         ": ranks start at 1");
    }
    list.ranks_.emplace(word, rank);
    list.max_rank_ = std::max(list.max_rank_, rank);
  });
  return list;
}

FrequencyList FrequencyList::LoadFile(const std::string& path) {
  return Parse(ReadFile(path));
}

size_t FrequencyList::Rank(const std::string& word) const {
  const auto it = ranks_.find(word);
  return it == ranks_.end() ? 0 : it->second;
}

std::shared_ptr<const LanguageResources> LanguageResources::ForLanguage(
    std::string_view language) {
  static std::mutex mu;
  static auto* cache =
      new std::map<std::string, std::shared_ptr<const LanguageResources>>();
  const std::string lang = NormalizeLanguage(language);
  const std::string dir = DataDir();
  const std::string key = dir + "|" + lang;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache->find(key); it != cache->end()) return it->second;

  auto res = std::make_shared<LanguageResources>();
  res->language = lang;
  const std::string freq_path = dir + "/frequency/" + lang + ".tsv";
  const std::string stop_path = dir + "/stopwords/" + lang + ".txt";
  if (std::ifstream(freq_path))
    res->frequencies = FrequencyList::LoadFile(freq_path);
  if (std::ifstream(stop_path)) {
    ForEachLine(ReadFile(stop_path), [&](std::string_view line, size_t) {
      res->stopwords.insert(ToLowerUtf8(line));
    });
  }
  cache->emplace(key, res);
  return res;
}

std::vector<Token> CandidateTokens(std::u32string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    if (IsSpace(text[i]) || IsPunctuation(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && !IsSpace(text[j]) && !IsPunctuation(text[j])) ++j;
    tokens.push_back({i, j});
    i = j;
  }
  return tokens;
}

std::vector<KeywordHit> TfIdfExtractor::Extract(
    const KeywordRequest& req) const {
  const std::u32string text = DecodeUtf8(req.text);
  if (text.size() <= 3) return {};
  const auto resources =
      resources_ ? resources_ : LanguageResources::ForLanguage(req.language);
  const FrequencyList& freq = resources->frequencies;

  const auto tokens = CandidateTokens(text);
  std::vector<std::string> lowered(tokens.size());
  std::vector<Candidate> candidates;
  std::unordered_map<std::string, size_t> index;
  for (size_t t = 0; t < tokens.size(); ++t) {
    const auto surface = std::u32string_view(text).substr(
        tokens[t].start, tokens[t].end - tokens[t].start);
    lowered[t] = EncodeUtf8(ToLower(surface));
    if (surface.size() < kMinKeywordLength || !AllLetters(surface)) continue;
    if (resources->stopwords.contains(lowered[t])) continue;
    auto [it, inserted] = index.emplace(lowered[t], candidates.size());
    if (inserted) candidates.push_back({lowered[t], t, 0, 0.0});
    ++candidates[it->second].count;
  }

  const double unknown_rank = static_cast<double>(freq.max_rank() + 1);
  double best = 0.0;
  for (auto& c : candidates) {
    const size_t rank = freq.Rank(c.term);
    const double idf =
        std::log1p(rank == 0 ? unknown_rank : static_cast<double>(rank));
    c.score = static_cast<double>(c.count) * idf;
    best = std::max(best, c.score);
  }
  for (auto& c : candidates) c.score = best > 0.0 ? c.score / best : 0.0;

  std::vector<const Candidate*> ranked;
  for (const auto& c : candidates) ranked.push_back(&c);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Candidate* a, const Candidate* b) {
                     if (a->score != b->score) return a->score > b->score;
                     return a->first < b->first;
                   });
  const size_t cap = static_cast<size_t>(std::max(req.max_keywords, 0));
  std::unordered_map<std::string, double> selected;
  for (size_t k = 0; k < ranked.size() && k < cap; ++k) {
    selected.emplace(ranked[k]->term, ranked[k]->score);
  }
  std::unordered_set<std::string> forced;
  for (const auto& f : req.forced_keywords) {
    if (!f.empty()) forced.insert(ToLowerUtf8(f));
  }

  std::vector<KeywordHit> hits;
  for (size_t t = 0; t < tokens.size(); ++t) {
    const auto sel = selected.find(lowered[t]);
    const bool is_forced = forced.contains(lowered[t]);
    if (sel == selected.end() && !is_forced) continue;
    KeywordHit hit;
    hit.surface = EncodeUtf8(std::u32string_view(text).substr(
        tokens[t].start, tokens[t].end - tokens[t].start));
    hit.start = tokens[t].start;
    hit.end = tokens[t].end;
    if (sel != selected.end()) {
      hit.score = sel->second;
    } else if (auto it = index.find(lowered[t]); it != index.end()) {
      hit.score = candidates[it->second].score;
    }
    hit.forced = is_forced;
    hits.push_back(std::move(hit));
  }
  return hits;
}

std::vector<KeywordHit> ExtractKeywords(const KeywordRequest& req) {
  return TfIdfExtractor().Extract(req);
}

}  // namespace camoforge
