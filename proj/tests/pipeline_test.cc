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

#include "camoforge/pipeline.h"

#include <array>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "camoforge/errors.h"
#include "camoforge/formats.h"
#include "camoforge/syllabify.h"
#include "camoforge/utf8.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace camoforge {
namespace {

// Returns every occurrence of one fixed word.
class FixedExtractor : public KeywordExtractor {
 public:
  explicit FixedExtractor(std::string word) : word_(std::move(word)) {}
  std::vector<KeywordHit> Extract(const KeywordRequest& req) const override {
    std::vector<KeywordHit> hits;
    const std::u32string text = DecodeUtf8(req.text);
    const std::u32string word = DecodeUtf8(word_);
    for (size_t at = text.find(word); at != std::u32string::npos;
         at = text.find(word, at + word.size())) {
      hits.push_back({word_, at, at + word.size(), 1.0, true});
    }
    return hits;
  }

 private:
  std::string word_;
};

std::vector<SourceDocument> LoadFixture() {
  std::ifstream in(std::string(CAMOFORGE_TEST_DATA_DIR) + "/corpus_1000.jsonl");
  return ReadSourceJsonl(in);
}

TEST(PipelineTest, ForcedInversionOnVacuna) {
  PipelineConfig cfg;
  cfg.technique = Technique::kInversion;
  const FixedExtractor extractor("vacuna");
  PipelineContext ctx;
  ctx.extractor = &extractor;
  const auto swaps = oracle::EnumerateSwaps(
      Syllabifier::ForLanguage("es").Split(U"vacuna"), 4);
  std::set<std::string> seen;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    RandomSource rng(seed);
    const auto doc = CamouflageDocument({"la vacuna es segura", "es", "test"},
                                        cfg, rng, ctx);
    ASSERT_EQ(doc.spans.size(), 1u);
    EXPECT_EQ(doc.spans[0], (Span{3, 9, EntityLabel::kInvCamo}));
    const std::string surface = SliceScalars(doc.text, 3, 9);
    ASSERT_TRUE(swaps.contains(DecodeUtf8(surface))) << surface;
    EXPECT_EQ(doc.text, "la " + surface + " es segura");
    seen.insert(doc.text);
  }
  EXPECT_TRUE(seen.contains("la nacuva es segura"));
}

TEST(PipelineTest, MonosyllabicInversionLeavesTextUnchanged) {
  PipelineConfig cfg;
  cfg.p_inversion = 1.0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    RandomSource rng(seed);
    const auto doc =
        CamouflageDocument({"the cat sat on the mat", "en", ""}, cfg, rng);
    EXPECT_EQ(doc.text, "the cat sat on the mat");
    EXPECT_TRUE(doc.spans.empty());
    ASSERT_TRUE(doc.provenance.has_value());
    EXPECT_FALSE(doc.provenance->extracted_keywords.empty());
    EXPECT_TRUE(doc.provenance->keywords.empty());
  }
}

TEST(PipelineTest, NoKeywordsReturnsDocumentUnchanged) {
  RandomSource rng(1);
  const auto doc =
      CamouflageDocument({"a an the", "en", ""}, PipelineConfig(), rng);
  EXPECT_EQ(doc.text, "a an the");
  EXPECT_TRUE(doc.spans.empty());
}

TEST(PipelineTest, TechniqueFrequenciesFollowTheTree) {
  // Every word is multi-syllabic, so no technique is structurally a no-op.
  const std::vector<std::string> words = {
      "vaccination", "government",  "dictatorship", "pandemic",  "genocide",
      "immigrant",   "information", "conspiracy",   "democracy", "violence",
      "terrorism",   "corruption",  "propaganda",   "election",  "politician"};
  std::vector<SourceDocument> docs;
  for (int i = 0; i < 10000; ++i)
    docs.push_back({words[i % words.size()], "en", ""});
  PipelineConfig cfg;
  cfg.seed = 2024;
  const auto out = CamouflageCorpus(docs, cfg, 4);
  std::array<double, kNumEntityLabels> counts{};
  for (const auto& doc : out) {
    ASSERT_EQ(doc.spans.size(), 1u) << doc.text;
    ++counts[static_cast<int>(doc.spans[0].label)];
  }
  const double n = static_cast<double>(out.size());
  EXPECT_NEAR(counts[static_cast<int>(EntityLabel::kInvCamo)] / n, 0.100, 0.02);
  EXPECT_NEAR(counts[static_cast<int>(EntityLabel::kLeetspeak)] / n, 0.9 * 0.45,
              0.02);
  EXPECT_NEAR(counts[static_cast<int>(EntityLabel::kPunctCamo)] / n, 0.9 * 0.25,
              0.02);
  EXPECT_NEAR(counts[static_cast<int>(EntityLabel::kMix)] / n, 0.9 * 0.30,
              0.02);
}

TEST(PipelineTest, SpansAndProvenanceAgreeOnFixture) {
  PipelineConfig cfg;
  cfg.seed = 7;
  const auto sources = LoadFixture();
  ASSERT_EQ(sources.size(), 1000u);
  const auto docs = CamouflageCorpus(sources, cfg, 2);
  size_t spans = 0;
  for (size_t i = 0; i < docs.size(); ++i) {
    const auto& doc = docs[i];
    ASSERT_NO_THROW(ValidateSpans(doc));
    ASSERT_TRUE(doc.provenance.has_value());
    ASSERT_EQ(doc.provenance->keywords.size(), doc.spans.size());
    EXPECT_EQ(doc.provenance->original_text, sources[i].text);
    for (size_t k = 0; k < doc.spans.size(); ++k) {
      const auto& kw = doc.provenance->keywords[k];
      EXPECT_EQ(SliceScalars(doc.text, doc.spans[k].start, doc.spans[k].end),
                kw.camouflaged);
      EXPECT_EQ(
          SliceScalars(sources[i].text, kw.original_start, kw.original_end),
          kw.original);
      EXPECT_NE(kw.camouflaged, kw.original);
      EXPECT_EQ(kw.label, doc.spans[k].label);
    }
    EXPECT_EQ(ReconstructOriginal(doc), sources[i].text);
    spans += doc.spans.size();
  }
  EXPECT_GT(spans, 2000u);
}

TEST(PipelineTest, MixIsLeetThenPunctuation) {
  PipelineConfig cfg;
  cfg.technique = Technique::kMix;
  const auto& table = SubstitutionTable::Default();
  const Syllabifier en = Syllabifier::ForLanguage("en");
  for (const std::u32string word : {U"covid", U"harm", U"virus", U"fraud"}) {
    std::set<std::u32string> leet;
    for (const auto& s : oracle::EnumerateLeet(word, table, cfg.leet)) {
      leet.insert(oracle::StripSymbols(s, cfg.punct.symbols));
    }
    for (uint64_t seed = 0; seed < 500; ++seed) {
      RandomSource rng(seed);
      const auto out =
          CamouflageKeyword(word, Technique::kMix, cfg, en, table, rng);
      ASSERT_TRUE(out.result.applied);
      const auto stripped =
          oracle::StripSymbols(out.result.text, cfg.punct.symbols);
      ASSERT_TRUE(leet.contains(stripped)) << out.result.Utf8();
    }
  }
}

TEST(PipelineTest, CorpusIsIndependentOfWorkerCount) {
  PipelineConfig cfg;
  cfg.seed = 42;
  auto sources = LoadFixture();
  sources.resize(200);
  const auto one = CamouflageCorpus(sources, cfg, 1);
  const auto many = CamouflageCorpus(sources, cfg, 8);
  ASSERT_EQ(one.size(), many.size());
  for (size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(DocumentToJsonLine(one[i]), DocumentToJsonLine(many[i]));
  }
}

TEST(PipelineTest, SameOccurrenceDrawsAreIndependent) {
  PipelineConfig cfg;
  const FixedExtractor extractor("covid");
  PipelineContext ctx;
  ctx.extractor = &extractor;
  bool differed = false;
  for (uint64_t seed = 0; seed < 50 && !differed; ++seed) {
    RandomSource rng(seed);
    const auto doc =
        CamouflageDocument({"covid and covid", "en", ""}, cfg, rng, ctx);
    ASSERT_EQ(doc.spans.size(), 2u);
    differed = doc.provenance->keywords[0].camouflaged !=
               doc.provenance->keywords[1].camouflaged;
  }
  EXPECT_TRUE(differed);
}

TEST(PipelineConfigTest, JsonRoundTrip) {
  PipelineConfig cfg;
  cfg.p_inversion = 0.2;
  cfg.leet.level_weights = {0.2, 0.3, 0.5};
  cfg.punct.symbols = U".-";
  cfg.punct.fixed_injections = 2;
  cfg.inv.max_distance_hi = 2;
  cfg.forced_keywords = {"vacuna"};
  cfg.seed = 99;
  cfg.technique = Technique::kPunct;
  const PipelineConfig back = PipelineConfig::FromJson(cfg.ToJson());
  EXPECT_EQ(back.ToJson(), cfg.ToJson());
}

TEST(PipelineConfigTest, DefaultsMatchReferenceValues) {
  const PipelineConfig cfg;
  EXPECT_DOUBLE_EQ(cfg.p_inversion, 0.10);
  EXPECT_DOUBLE_EQ(cfg.p_leet, 0.45);
  EXPECT_DOUBLE_EQ(cfg.p_punct, 0.25);
  EXPECT_DOUBLE_EQ(cfg.p_mix, 0.30);
  EXPECT_DOUBLE_EQ(cfg.leet.change_prb, 0.8);
  EXPECT_DOUBLE_EQ(cfg.leet.change_frq, 0.5);
  EXPECT_EQ(cfg.leet.level_weights, (std::array<double, 3>{0.5, 0.4, 0.1}));
  EXPECT_DOUBLE_EQ(cfg.leet.uniform_change_prb, 0.6);
  EXPECT_DOUBLE_EQ(cfg.punct.hyphenation_prb, 0.5);
  EXPECT_DOUBLE_EQ(cfg.punct.uniform_change_prb, 0.6);
  EXPECT_DOUBLE_EQ(cfg.punct.word_splitting_prb, 0.5);
  EXPECT_EQ(cfg.inv.max_distance_lo, 1);
  EXPECT_EQ(cfg.inv.max_distance_hi, 4);
  EXPECT_EQ(cfg.max_keywords, 5);
}

TEST(PipelineConfigTest, ShippedConfigEqualsDefaults) {
  const auto cfg = PipelineConfig::LoadFile(
      std::string(CAMOFORGE_TEST_DATA_DIR) + "/../../data/config/default.json");
  EXPECT_EQ(cfg.ToJson(), PipelineConfig().ToJson());
}

TEST(PipelineConfigTest, RejectsInvalidConfigs) {
  Json j = PipelineConfig().ToJson();
  j["p_leet"] = 0.5;
  EXPECT_THROW(PipelineConfig::FromJson(j), Error);
  j = PipelineConfig().ToJson();
  j["bogus"] = 1;
  EXPECT_THROW(PipelineConfig::FromJson(j), Error);
  j = PipelineConfig().ToJson();
  j["leet"]["change_prb"] = "high";
  EXPECT_THROW(PipelineConfig::FromJson(j), Error);
  j = PipelineConfig().ToJson();
  j["technique"] = "rot13";
  EXPECT_THROW(PipelineConfig::FromJson(j), Error);
}

TEST(TechniqueTest, NamesAndLabels) {
  EXPECT_EQ(ParseTechnique("inversion"), Technique::kInversion);
  EXPECT_EQ(ParseTechnique("nope"), std::nullopt);
  EXPECT_EQ(LabelFor(Technique::kMix), EntityLabel::kMix);
  EXPECT_EQ(LabelFor(Technique::kPunct), EntityLabel::kPunctCamo);
  EXPECT_STREQ(TechniqueName(Technique::kLeet), "leet");
}

}  // namespace
}  // namespace camoforge
