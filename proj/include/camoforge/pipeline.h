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

#ifndef CAMOFORGE_PIPELINE_H_
#define CAMOFORGE_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "camoforge/camouflage.h"
#include "camoforge/document.h"
#include "camoforge/keywords.h"
#include "camoforge/random.h"
#include "camoforge/substitution_table.h"

namespace camoforge {

enum class Technique { kAuto, kLeet, kPunct, kInversion, kMix };

const char* TechniqueName(Technique t);
std::optional<Technique> ParseTechnique(std::string_view name);
EntityLabel LabelFor(Technique t);

struct PipelineConfig;
// Returns cfg.technique unless it is kAuto, otherwise samples the technique
// tree: inversion with p_inversion, else leet / punct / mix by weight.
Technique DrawTechnique(const PipelineConfig& cfg, RandomSource& rng);

// Generator settings. Defaults reproduce the reference parameter set.
//
// Per keyword occurrence: inversion with p_inversion, otherwise one of
// leet / punct / mix drawn with weights p_leet, p_punct, p_mix.
struct PipelineConfig {
  double p_inversion = 0.10;
  double p_leet = 0.45;
  double p_punct = 0.25;
  double p_mix = 0.30;
  LeetConfig leet;
  PunctConfig punct;
  InvConfig inv;
  int max_keywords = 5;
  std::vector<std::string> forced_keywords;
  uint64_t seed = 0;
  // Anything but kAuto skips the technique draw.
  Technique technique = Technique::kAuto;
  // Extra attempts with fresh draws when a transform leaves a keyword
  // unchanged by chance. Words a transform can never change are skipped.
  int max_redraws = 8;

  void Validate() const;

  // Field names mirror the struct; missing fields keep their defaults and
  // unknown fields are rejected.
  Json ToJson() const;
  static PipelineConfig FromJson(const Json& j);
  static PipelineConfig LoadFile(const std::string& path);
};

struct SourceDocument {
  std::string text;
  std::string language = "en";
  std::string source;
};

// Shared, read-only collaborators of the generator.
struct PipelineContext {
  const SubstitutionTable* table = &SubstitutionTable::Default();
  // nullptr selects the bundled TF-IDF extractor.
  const KeywordExtractor* extractor = nullptr;
};

// Camouflages one keyword with a fixed technique. `applied` is false when
// every attempt was a no-op.
struct KeywordOutcome {
  TransformResult result;
  Technique technique = Technique::kAuto;
  int attempts = 0;
};
KeywordOutcome CamouflageKeyword(std::u32string_view word, Technique technique,
                                 const PipelineConfig& cfg,
                                 const Syllabifier& syl,
                                 const SubstitutionTable& table,
                                 RandomSource& rng);

// Extracts keywords, camouflages every occurrence and annotates the result.
// Spans refer to the final text.
AnnotatedDocument CamouflageDocument(const SourceDocument& doc,
                                     const PipelineConfig& cfg,
                                     RandomSource& rng,
                                     const PipelineContext& ctx = {});

// Document i uses RandomSource(DeriveSeed(cfg.seed, i)), so the output is
// identical for any worker count and always in input order.
std::vector<AnnotatedDocument> CamouflageCorpus(
    const std::vector<SourceDocument>& docs, const PipelineConfig& cfg,
    int workers = 1, const PipelineContext& ctx = {});

}  // namespace camoforge

#endif  // CAMOFORGE_PIPELINE_H_
