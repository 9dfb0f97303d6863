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

#include "camoforge/syllabify.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "camoforge/data_paths.h"
#include "camoforge/errors.h"
#include "camoforge/utf8.h"

namespace camoforge {
namespace {

bool IsSeparator(char32_t c) {
  return c == '\'' || c == 0x2019 || c == 0x02BC || c == '-' || c == 0x2010;
}

bool IsVowel(char32_t c) {
  static constexpr std::u32string_view kVowels =
      U"aeiouyàáâãäåæèéêëìíîïòóôõöøùúûüýÿœαεηιοωυаеёиоуыэюя";
  return kVowels.find(ToLower(c)) != std::u32string_view::npos;
}

// Two-consonant clusters that can open a syllable in the supported
// languages.
bool IsOnsetCluster(char32_t a, char32_t b) {
  static constexpr std::u32string_view kClusters[] = {
      U"bl", U"br", U"cl", U"cr", U"dr", U"fl", U"fr", U"gl",
      U"gr", U"pl", U"pr", U"tr", U"ch", U"ll", U"rr", U"th",
      U"sh", U"ph", U"qu", U"gn", U"kl", U"kr", U"wr"};
  const char32_t pair[] = {ToLower(a), ToLower(b)};
  const std::u32string_view sv(pair, 2);
  for (auto cluster : kClusters) {
    if (cluster == sv) return true;
  }
  return false;
}

// Vowel runs are nuclei; between two nuclei the break goes before the last
// consonant, or before the last two when they form an onset cluster.
std::vector<size_t> HeuristicBoundaries(std::u32string_view run) {
  std::vector<size_t> out;
  std::vector<std::pair<size_t, size_t>> nuclei;
  for (size_t i = 0; i < run.size();) {
    if (!IsVowel(run[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < run.size() && IsVowel(run[j])) ++j;
    nuclei.emplace_back(i, j);
    i = j;
  }
  for (size_t k = 1; k < nuclei.size(); ++k) {
    const size_t cons_begin = nuclei[k - 1].second;
    const size_t cons_end = nuclei[k].first;
    const size_t n = cons_end - cons_begin;
    if (n == 0) continue;
    size_t cut = cons_end - 1;
    if (n >= 2 && IsOnsetCluster(run[cons_end - 2], run[cons_end - 1])) {
      cut = cons_end - 2;
    }
    if (cut > 0 && cut < run.size()) out.push_back(cut);
  }
  return out;
}

std::mutex& CacheMutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::string, std::shared_ptr<const HyphenationPatterns>>& Cache() {
  static auto* cache =
      new std::map<std::string, std::shared_ptr<const HyphenationPatterns>>();
  return *cache;
}

}  // namespace

HyphenationPatterns HyphenationPatterns::Parse(std::string_view contents) {
  HyphenationPatterns hp;
  bool first = true;
  size_t pos = 0;
  while (pos <= contents.size()) {
    size_t eol = contents.find('\n', pos);
    if (eol == std::string_view::npos) eol = contents.size();
    std::string_view line = contents.substr(pos, eol - pos);
    pos = eol + 1;
    while (!line.empty() &&
           (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (first) {
      first = false;
      std::string enc(line);
      std::transform(enc.begin(), enc.end(), enc.begin(), ::toupper);
      if (enc != "UTF-8") {
        throw Error(ErrorCode::kParse,
                    "hyphenation patterns must be UTF-8, got '" + enc + "'");
      }
      continue;
    }
    if (line.empty() || line.front() == '%' || line.front() == '#') continue;
    if (line.front() >= 'A' && line.front() <= 'Z') continue;  // directive
    if (line.find('/') != std::string_view::npos) continue;    // non-standard

    const std::u32string pattern = DecodeUtf8(line);
    std::u32string letters;
    std::vector<uint8_t> values;
    uint8_t pending = 0;
    for (char32_t c : pattern) {
      if (IsDigit(c)) {
        pending = static_cast<uint8_t>(c - '0');
      } else {
        values.push_back(pending);
        letters.push_back(c);
        pending = 0;
      }
    }
    values.push_back(pending);
    if (letters.empty()) continue;
    size_t start = 0;
    size_t end = values.size();
    while (start < end && values[start] == 0) ++start;
    while (end > start && values[end - 1] == 0) --end;
    if (start == end) continue;
    hp.max_length_ = std::max(hp.max_length_, letters.size());
    hp.patterns_[letters] = Pattern{
        start,
        std::vector<uint8_t>(values.begin() + start, values.begin() + end)};
  }
  if (hp.patterns_.empty()) {
    throw Error(ErrorCode::kParse, "no hyphenation patterns found");
  }
  return hp;
}

HyphenationPatterns HyphenationPatterns::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open pattern file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

std::vector<size_t> HyphenationPatterns::BreakPoints(std::u32string_view word,
                                                     size_t left_min,
                                                     size_t right_min) const {
  std::u32string dotted;
  dotted.reserve(word.size() + 2);
  dotted.push_back('.');
  for (char32_t c : word) dotted.push_back(ToLower(c));
  dotted.push_back('.');

  // levels[j] scores the gap just before dotted[j].
  std::vector<uint8_t> levels(dotted.size() + 1, 0);
  std::u32string key;
  for (size_t i = 0; i + 1 < dotted.size(); ++i) {
    const size_t stop = std::min(i + max_length_, dotted.size());
    for (size_t j = i + 1; j <= stop; ++j) {
      key.assign(dotted, i, j - i);
      const auto it = patterns_.find(key);
      if (it == patterns_.end()) continue;
      const Pattern& p = it->second;
      for (size_t k = 0; k < p.values.size(); ++k) {
        uint8_t& slot = levels[i + p.offset + k];
        slot = std::max(slot, p.values[k]);
      }
    }
  }
  std::vector<size_t> out;
  for (size_t j = 0; j < levels.size(); ++j) {
    if (levels[j] % 2 == 0 || j < 1) continue;
    const size_t pos = j - 1;
    if (pos == 0 || pos >= word.size()) continue;
    if (pos < left_min || pos + right_min > word.size()) continue;
    out.push_back(pos);
  }
  return out;
}

Syllabifier::Syllabifier(std::string language,
                         std::shared_ptr<const HyphenationPatterns> patterns,
                         size_t left_min, size_t right_min)
    : language_(std::move(language)),
      patterns_(std::move(patterns)),
      left_min_(left_min),
      right_min_(right_min) {}

Syllabifier Syllabifier::Heuristic(std::string language) {
  return Syllabifier(std::move(language), nullptr);
}

Syllabifier Syllabifier::ForLanguage(std::string_view language) {
  const std::string lang = NormalizeLanguage(language);
  static constexpr std::string_view kBundled[] = {"en", "es", "fr", "it", "de"};
  if (std::find(std::begin(kBundled), std::end(kBundled), lang) ==
      std::end(kBundled)) {
    return Heuristic(lang);
  }
  const std::string path = DataDir() + "/hyphenation/" + lang + ".dic";
  std::lock_guard<std::mutex> lock(CacheMutex());
  auto it = Cache().find(path);
  if (it == Cache().end()) {
    std::shared_ptr<const HyphenationPatterns> loaded;
    if (std::filesystem::exists(path)) {
      loaded = std::make_shared<const HyphenationPatterns>(
          HyphenationPatterns::LoadFile(path));
    }
    it = Cache().emplace(path, std::move(loaded)).first;
  }
  return Syllabifier(lang, it->second);
}

std::vector<size_t> Syllabifier::AlphaBoundaries(
    std::u32string_view run) const {
  if (run.size() < 2) return {};
  if (patterns_) return patterns_->BreakPoints(run, left_min_, right_min_);
  return HeuristicBoundaries(run);
}

std::vector<size_t> Syllabifier::Boundaries(std::u32string_view word) const {
  size_t letters = 0;
  for (char32_t c : word) letters += IsLetter(c) ? 1 : 0;
  if (letters == 0 || letters * 2 < word.size()) return {};

  std::vector<size_t> out;
  size_t run_start = 0;
  for (size_t i = 0; i <= word.size(); ++i) {
    if (i < word.size() && !IsSeparator(word[i])) continue;
    for (size_t b : AlphaBoundaries(word.substr(run_start, i - run_start))) {
      out.push_back(run_start + b);
    }
    // A separator closes the syllable it ends.
    if (i + 1 < word.size()) out.push_back(i + 1);
    run_start = i + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::u32string> Syllabifier::Split(std::u32string_view word) const {
  std::vector<std::u32string> out;
  size_t prev = 0;
  for (size_t b : Boundaries(word)) {
    out.emplace_back(word.substr(prev, b - prev));
    prev = b;
  }
  if (prev < word.size() || out.empty()) out.emplace_back(word.substr(prev));
  return out;
}

std::vector<std::string> Syllabifier::Split(std::string_view word) const {
  std::vector<std::string> out;
  for (const auto& s : Split(std::u32string_view(DecodeUtf8(word)))) {
    out.push_back(EncodeUtf8(s));
  }
  return out;
}

}  // namespace camoforge
