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

#include "camoforge/camouflage.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "camoforge/errors.h"
#include "camoforge/utf8.h"

namespace camoforge {
namespace {

void CheckProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(name) + " must be in [0, 1]");
  }
}

// First `k` elements of `items` become a uniform sample without replacement.
template <typename T>
void PartialShuffle(std::vector<T>& items, size_t k, RandomSource& rng) {
  for (size_t i = 0; i < k && i + 1 < items.size(); ++i) {
    const auto j = static_cast<size_t>(rng.UniformInt(
        static_cast<int64_t>(i), static_cast<int64_t>(items.size()) - 1));
    std::swap(items[i], items[j]);
  }
}

// Level from the weights, descending to the nearest populated lower level.
const Replacement* DrawReplacement(const std::vector<Replacement>& options,
                                   const LeetConfig& cfg, RandomSource& rng) {
  const size_t drawn = rng.WeightedChoice(cfg.level_weights);
  for (int level = static_cast<int>(drawn); level >= 0; --level) {
    std::vector<const Replacement*> at_level;
    for (const auto& r : options) {
      if (static_cast<int>(r.level) == level) at_level.push_back(&r);
    }
    if (at_level.empty()) continue;
    const auto idx =
        rng.UniformInt(0, static_cast<int64_t>(at_level.size()) - 1);
    return at_level[static_cast<size_t>(idx)];
  }
  return nullptr;
}

std::string Str(char32_t c) { return EncodeUtf8(std::u32string(1, c)); }

}  // namespace

void LeetConfig::Validate() const {
  CheckProbability(change_prb, "leet.change_prb");
  CheckProbability(change_frq, "leet.change_frq");
  CheckProbability(uniform_change_prb, "leet.uniform_change_prb");
  double total = 0.0;
  for (double w : level_weights) {
    CheckProbability(w, "leet.level_weights");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidConfig, "leet.level_weights must sum to 1");
  }
}

void PunctConfig::Validate() const {
  CheckProbability(hyphenation_prb, "punct.hyphenation_prb");
  CheckProbability(uniform_change_prb, "punct.uniform_change_prb");
  CheckProbability(word_splitting_prb, "punct.word_splitting_prb");
  if (symbols.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "punct.symbols must not be empty");
  }
  for (char32_t c : symbols) {
    if (IsLetter(c) || IsDigit(c) || IsSpace(c)) {
      throw Error(ErrorCode::kInvalidConfig,
                  "punct.symbols may not contain letters, digits or spaces");
    }
  }
  if (fixed_injections && *fixed_injections < 0) {
    throw Error(ErrorCode::kInvalidConfig, "punct injection count is negative");
  }
}

void InvConfig::Validate() const {
  if (max_distance_lo < 1 || max_distance_hi < max_distance_lo) {
    throw Error(ErrorCode::kInvalidConfig,
                "inversion max distance range must satisfy 1 <= lo <= hi");
  }
}

std::string TransformResult::Utf8() const { return EncodeUtf8(text); }

TransformResult Leetspeak(std::u32string_view word,
                          const SubstitutionTable& table, const LeetConfig& cfg,
                          RandomSource& rng) {
  TransformResult result;
  result.text = std::u32string(word);

  // Distinct substitutable characters in order of first occurrence.
  std::vector<char32_t> kinds;
  for (char32_t c : word) {
    const char32_t key = ToLower(c);
    if (table.Contains(key) &&
        std::find(kinds.begin(), kinds.end(), key) == kinds.end()) {
      kinds.push_back(key);
    }
  }
  result.offset_map.resize(word.size() + 1);
  for (size_t i = 0; i <= word.size(); ++i) result.offset_map[i] = i;
  if (kinds.empty()) {
    result.inapplicable = true;
    result.params["reason"] = "no substitutable character";
    return result;
  }

  const bool uniform = rng.Bernoulli(cfg.uniform_change_prb);
  result.params["uniform_change"] = uniform;
  Json changes = Json::array();

  std::vector<const Replacement*> chosen(word.size(), nullptr);
  for (char32_t kind : kinds) {
    if (!rng.Bernoulli(cfg.change_prb)) continue;
    const auto& options = *table.Find(kind);
    std::vector<size_t> positions;
    for (size_t i = 0; i < word.size(); ++i) {
      if (ToLower(word[i]) == kind) positions.push_back(i);
    }
    const double raw = cfg.change_frq * static_cast<double>(positions.size());
    size_t count = static_cast<size_t>(std::ceil(raw - 1e-9));
    count = std::clamp<size_t>(count, 1, positions.size());
    PartialShuffle(positions, count, rng);
    positions.resize(count);
    std::sort(positions.begin(), positions.end());

    const Replacement* shared =
        uniform ? DrawReplacement(options, cfg, rng) : nullptr;
    Json entry = {{"char", Str(kind)},
                  {"positions", Json::array()},
                  {"replacements", Json::array()},
                  {"levels", Json::array()}};
    for (size_t pos : positions) {
      const Replacement* r =
          uniform ? shared : DrawReplacement(options, cfg, rng);
      if (r == nullptr) continue;
      chosen[pos] = r;
      entry["positions"].push_back(pos);
      entry["replacements"].push_back(EncodeUtf8(r->text));
      entry["levels"].push_back(ComplexityLevelName(r->level));
    }
    if (!entry["positions"].empty()) changes.push_back(std::move(entry));
  }
  result.params["changes"] = std::move(changes);

  std::u32string out;
  for (size_t i = 0; i < word.size(); ++i) {
    result.offset_map[i] = out.size();
    if (chosen[i] != nullptr) {
      out += chosen[i]->text;
    } else {
      out.push_back(word[i]);
    }
  }
  result.offset_map[word.size()] = out.size();
  result.applied = out != word;
  result.text = std::move(out);
  return result;
}

TransformResult PunctCamouflage(std::u32string_view word,
                                const PunctConfig& cfg, const Syllabifier& syl,
                                RandomSource& rng) {
  const auto gaps = syl.Boundaries(word);
  return PunctCamouflage(word, cfg, gaps, rng);
}

TransformResult PunctCamouflage(std::u32string_view word,
                                const PunctConfig& cfg,
                                std::span<const size_t> syllable_gaps,
                                RandomSource& rng) {
  TransformResult result;
  result.text = std::u32string(word);
  if (word.size() < 2) {
    result.inapplicable = true;
    result.params["reason"] = "word shorter than 2 characters";
    return result;
  }

  std::vector<size_t> all_gaps;
  for (size_t i = 1; i < word.size(); ++i) all_gaps.push_back(i);

  std::vector<size_t> gaps;
  bool splitting = false;
  if (!cfg.fixed_injections) splitting = rng.Bernoulli(cfg.word_splitting_prb);
  result.params["word_splitting"] = splitting;
  if (splitting) {
    gaps = all_gaps;
  } else {
    const size_t requested = cfg.fixed_injections
                                 ? static_cast<size_t>(*cfg.fixed_injections)
                                 : static_cast<size_t>(rng.UniformInt(
                                       1, static_cast<int64_t>(word.size())));
    const bool hyphenate = rng.Bernoulli(cfg.hyphenation_prb);
    std::vector<size_t> candidates;
    if (hyphenate) {
      for (size_t g : syllable_gaps) {
        if (g > 0 && g < word.size()) candidates.push_back(g);
      }
    }
    // No syllable boundary to use: any gap will do.
    const bool used_syllables = !candidates.empty();
    if (!used_syllables) candidates = all_gaps;
    const size_t count = std::min(requested, candidates.size());
    PartialShuffle(candidates, count, rng);
    candidates.resize(count);
    std::sort(candidates.begin(), candidates.end());
    gaps = std::move(candidates);
    result.params["hyphenation"] = used_syllables;
    result.params["requested_injections"] = requested;
  }

  const bool uniform = rng.Bernoulli(cfg.uniform_change_prb);
  result.params["uniform_change"] = uniform;
  const auto pick = [&] {
    return cfg.symbols[static_cast<size_t>(
        rng.UniformInt(0, static_cast<int64_t>(cfg.symbols.size()) - 1))];
  };
  std::vector<char32_t> symbols;
  if (!gaps.empty()) {
    if (uniform) {
      symbols.assign(gaps.size(), pick());
    } else {
      for (size_t k = 0; k < gaps.size(); ++k) symbols.push_back(pick());
    }
  }

  std::u32string out;
  size_t next = 0;
  for (size_t i = 0; i < word.size(); ++i) {
    if (next < gaps.size() && gaps[next] == i) {
      out.push_back(symbols[next]);
      ++next;
    }
    out.push_back(word[i]);
  }
  result.params["gaps"] = gaps;
  Json syms = Json::array();
  for (char32_t c : symbols) syms.push_back(Str(c));
  result.params["symbols"] = std::move(syms);
  result.applied = !gaps.empty();
  result.text = std::move(out);
  return result;
}

TransformResult InversionCamouflage(std::u32string_view word,
                                    const InvConfig& cfg,
                                    const Syllabifier& syl, RandomSource& rng) {
  TransformResult result;
  result.text = std::u32string(word);
  auto syllables = syl.Split(word);
  if (syllables.size() < 2) {
    result.inapplicable = true;
    result.params["reason"] = "fewer than 2 syllables";
    return result;
  }
  const auto max_distance = static_cast<size_t>(
      rng.UniformInt(cfg.max_distance_lo, cfg.max_distance_hi));
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < syllables.size(); ++i) {
    for (size_t j = i + 1; j < syllables.size() && j - i <= max_distance; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  const auto [a, b] = pairs[static_cast<size_t>(
      rng.UniformInt(0, static_cast<int64_t>(pairs.size()) - 1))];
  Json syl_json = Json::array();
  for (const auto& s : syllables) syl_json.push_back(EncodeUtf8(s));
  std::swap(syllables[a], syllables[b]);

  std::u32string out;
  for (const auto& s : syllables) out += s;
  result.params["syllables"] = std::move(syl_json);
  result.params["max_distance"] = max_distance;
  result.params["swap"] = {a, b};
  result.applied = out != word;
  result.text = std::move(out);
  return result;
}

}  // namespace camoforge
