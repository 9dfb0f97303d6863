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

// Single-word camouflage transforms: leetspeak substitution, punctuation
// injection and syllable inversion. Every transform is a pure function of
// its inputs and the state of the RandomSource it is handed.

#ifndef CAMOFORGE_CAMOUFLAGE_H_
#define CAMOFORGE_CAMOUFLAGE_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "camoforge/random.h"
#include "camoforge/substitution_table.h"
#include "camoforge/syllabify.h"
#include "json.hpp"

namespace camoforge {

using Json = nlohmann::ordered_json;

struct LeetConfig {
  // Probability that a substitutable character type is changed at all.
  double change_prb = 0.8;
  // Fraction of the occurrences of a selected character that are changed.
  double change_frq = 0.5;
  // Indexed by ComplexityLevel; must sum to 1.
  std::array<double, kNumComplexityLevels> level_weights = {0.5, 0.4, 0.1};
  double uniform_change_prb = 0.6;

  void Validate() const;
};

// The 32 ASCII punctuation characters, in code point order.
inline constexpr std::u32string_view kAsciiPunctuation =
    U"!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";

struct PunctConfig {
  double hyphenation_prb = 0.5;
  double uniform_change_prb = 0.6;
  double word_splitting_prb = 0.5;
  std::u32string symbols = std::u32string(kAsciiPunctuation);
  // When set, exactly this many gaps receive a symbol and word splitting is
  // never drawn. Otherwise the count is uniform over [1, word length].
  std::optional<int> fixed_injections;

  void Validate() const;
};

struct InvConfig {
  // The maximum swap distance is drawn uniformly from [lo, hi].
  int max_distance_lo = 1;
  int max_distance_hi = 4;

  void Validate() const;
};

struct TransformResult {
  std::u32string text;
  // False when the word came back unchanged ("no-op"), either because the
  // transform does not apply to it or because the draws left it intact.
  bool applied = false;
  // True only for the first kind: no draw could ever change this word.
  bool inapplicable = false;
  // Parameter draws, recorded in provenance.
  Json params = Json::object();
  // Leetspeak only: offset_map[i] is where input scalar i starts in `text`;
  // offset_map.back() == text.size().
  std::vector<size_t> offset_map;

  std::string Utf8() const;
};

TransformResult Leetspeak(std::u32string_view word,
                          const SubstitutionTable& table, const LeetConfig& cfg,
                          RandomSource& rng);

TransformResult PunctCamouflage(std::u32string_view word,
                                const PunctConfig& cfg, const Syllabifier& syl,
                                RandomSource& rng);

// Same as above with the syllable gaps already known (offsets into `word`).
TransformResult PunctCamouflage(std::u32string_view word,
                                const PunctConfig& cfg,
                                std::span<const size_t> syllable_gaps,
                                RandomSource& rng);

TransformResult InversionCamouflage(std::u32string_view word,
                                    const InvConfig& cfg,
                                    const Syllabifier& syl, RandomSource& rng);

}  // namespace camoforge

#endif  // CAMOFORGE_CAMOUFLAGE_H_
