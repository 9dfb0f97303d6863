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

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <thread>

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

void CheckKeys(const Json& j, const char* where,
               std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(where) + " must be an object");
  }
  for (const auto& item : j.items()) {
    bool known = false;
    for (auto k : allowed) known = known || item.key() == k;
    if (!known) {
      throw Error(ErrorCode::kInvalidConfig, std::string("unknown field '") +
                                                 item.key() + "' in " + where);
    }
  }
}

template <typename T>
void Read(const Json& j, const char* key, T* out) {
  if (!j.contains(key)) return;
  try {
    *out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string("field '") + key + "': " + e.what());
  }
}

TransformResult ApplyOnce(std::u32string_view word, Technique technique,
                          const PipelineConfig& cfg, const Syllabifier& syl,
                          const SubstitutionTable& table, RandomSource& rng) {
  switch (technique) {
    case Technique::kLeet:
      return Leetspeak(word, table, cfg.leet, rng);
    case Technique::kPunct:
      return PunctCamouflage(word, cfg.punct, syl, rng);
    case Technique::kInversion:
      return InversionCamouflage(word, cfg.inv, syl, rng);
    case Technique::kMix:
    case Technique::kAuto:
      break;
  }
  // Leetspeak first, then punctuation at the original syllable boundaries
  // mapped onto the substituted word.
  TransformResult leet = Leetspeak(word, table, cfg.leet, rng);
  if (!leet.applied) return leet;
  std::vector<size_t> gaps;
  for (size_t b : syl.Boundaries(word)) gaps.push_back(leet.offset_map[b]);
  TransformResult punct = PunctCamouflage(leet.text, cfg.punct, gaps, rng);
  TransformResult mixed;
  mixed.text = std::move(punct.text);
  mixed.applied = punct.applied;
  mixed.inapplicable = punct.inapplicable;
  mixed.params["leet"] = std::move(leet.params);
  mixed.params["punct"] = std::move(punct.params);
  return mixed;
}

}  // namespace

Technique DrawTechnique(const PipelineConfig& cfg, RandomSource& rng) {
  if (cfg.technique != Technique::kAuto) return cfg.technique;
  if (rng.Bernoulli(cfg.p_inversion)) return Technique::kInversion;
  const double weights[] = {cfg.p_leet, cfg.p_punct, cfg.p_mix};
  switch (rng.WeightedChoice(weights)) {
    case 0:
      return Technique::kLeet;
    case 1:
      return Technique::kPunct;
    default:
      return Technique::kMix;
  }
}

const char* TechniqueName(Technique t) {
  switch (t) {
    case Technique::kAuto:
      return "auto";
    case Technique::kLeet:
      return "leet";
    case Technique::kPunct:
      return "punct";
    case Technique::kInversion:
      return "inversion";
    case Technique::kMix:
      return "mix";
  }
  return "auto";
}

std::optional<Technique> ParseTechnique(std::string_view name) {
  for (Technique t : {Technique::kAuto, Technique::kLeet, Technique::kPunct,
                      Technique::kInversion, Technique::kMix}) {
    if (name == TechniqueName(t)) return t;
  }
  return std::nullopt;
}

EntityLabel LabelFor(Technique t) {
  switch (t) {
    case Technique::kPunct:
      return EntityLabel::kPunctCamo;
    case Technique::kInversion:
      return EntityLabel::kInvCamo;
    case Technique::kMix:
      return EntityLabel::kMix;
    default:
      return EntityLabel::kLeetspeak;
  }
}

void PipelineConfig::Validate() const {
  CheckProbability(p_inversion, "p_inversion");
  CheckProbability(p_leet, "p_leet");
  CheckProbability(p_punct, "p_punct");
  CheckProbability(p_mix, "p_mix");
  if (std::abs(p_leet + p_punct + p_mix - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidConfig,
                "p_leet + p_punct + p_mix must be 1");
  }
  leet.Validate();
  punct.Validate();
  inv.Validate();
  if (max_keywords < 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "keywords.max_keywords must be >= 1");
  }
  if (max_redraws < 0) {
    throw Error(ErrorCode::kInvalidConfig, "max_redraws must be >= 0");
  }
}

Json PipelineConfig::ToJson() const {
  Json j;
  j["p_inversion"] = p_inversion;
  j["p_leet"] = p_leet;
  j["p_punct"] = p_punct;
  j["p_mix"] = p_mix;
  j["leet"] = {{"change_prb", leet.change_prb},
               {"change_frq", leet.change_frq},
               {"level_weights",
                {{"basic", leet.level_weights[0]},
                 {"intermediate", leet.level_weights[1]},
                 {"advanced", leet.level_weights[2]}}},
               {"uniform_change_prb", leet.uniform_change_prb}};
  j["punct"] = {
      {"hyphenation_prb", punct.hyphenation_prb},
      {"uniform_change_prb", punct.uniform_change_prb},
      {"word_splitting_prb", punct.word_splitting_prb},
      {"symbols", EncodeUtf8(punct.symbols)},
      {"injections",
       punct.fixed_injections ? Json(*punct.fixed_injections) : Json(nullptr)}};
  j["inv"] = {{"max_distance", {inv.max_distance_lo, inv.max_distance_hi}}};
  j["keywords"] = {{"max_keywords", max_keywords},
                   {"forced_keywords", forced_keywords}};
  j["seed"] = seed;
  j["technique"] = TechniqueName(technique);
  j["max_redraws"] = max_redraws;
  return j;
}

PipelineConfig PipelineConfig::FromJson(const Json& j) {
  PipelineConfig cfg;
  CheckKeys(j, "config",
            {"p_inversion", "p_leet", "p_punct", "p_mix", "leet", "punct",
             "inv", "keywords", "seed", "technique", "max_redraws"});
  Read(j, "p_inversion", &cfg.p_inversion);
  Read(j, "p_leet", &cfg.p_leet);
  Read(j, "p_punct", &cfg.p_punct);
  Read(j, "p_mix", &cfg.p_mix);
  Read(j, "seed", &cfg.seed);
  Read(j, "max_redraws", &cfg.max_redraws);
  if (j.contains("technique")) {
    std::string name;
    Read(j, "technique", &name);
    const auto t = ParseTechnique(name);
    if (!t) throw Error(ErrorCode::kInvalidConfig, "unknown technique " + name);
    cfg.technique = *t;
  }
  if (j.contains("leet")) {
    const Json& l = j["leet"];
    CheckKeys(
        l, "leet",
        {"change_prb", "change_frq", "level_weights", "uniform_change_prb"});
    Read(l, "change_prb", &cfg.leet.change_prb);
    Read(l, "change_frq", &cfg.leet.change_frq);
    Read(l, "uniform_change_prb", &cfg.leet.uniform_change_prb);
    if (l.contains("level_weights")) {
      const Json& w = l["level_weights"];
      CheckKeys(w, "leet.level_weights", {"basic", "intermediate", "advanced"});
      Read(w, "basic", &cfg.leet.level_weights[0]);
      Read(w, "intermediate", &cfg.leet.level_weights[1]);
      Read(w, "advanced", &cfg.leet.level_weights[2]);
    }
  }
  if (j.contains("punct")) {
    const Json& p = j["punct"];
    CheckKeys(p, "punct",
              {"hyphenation_prb", "uniform_change_prb", "word_splitting_prb",
               "symbols", "injections"});
    Read(p, "hyphenation_prb", &cfg.punct.hyphenation_prb);
    Read(p, "uniform_change_prb", &cfg.punct.uniform_change_prb);
    Read(p, "word_splitting_prb", &cfg.punct.word_splitting_prb);
    if (p.contains("symbols")) {
      std::string symbols;
      Read(p, "symbols", &symbols);
      cfg.punct.symbols = DecodeUtf8(symbols);
    }
    if (p.contains("injections") && !p["injections"].is_null()) {
      int n = 0;
      Read(p, "injections", &n);
      cfg.punct.fixed_injections = n;
    }
  }
  if (j.contains("inv")) {
    const Json& i = j["inv"];
    CheckKeys(i, "inv", {"max_distance"});
    std::vector<int> range;
    Read(i, "max_distance", &range);
    if (range.size() != 2) {
      throw Error(ErrorCode::kInvalidConfig,
                  "inv.max_distance must be [lo, hi]");
    }
    cfg.inv.max_distance_lo = range[0];
    cfg.inv.max_distance_hi = range[1];
  }
  if (j.contains("keywords")) {
    const Json& k = j["keywords"];
    CheckKeys(k, "keywords", {"max_keywords", "forced_keywords"});
    Read(k, "max_keywords", &cfg.max_keywords);
    Read(k, "forced_keywords", &cfg.forced_keywords);
  }
  cfg.Validate();
  return cfg;
}

PipelineConfig PipelineConfig::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, path + ": " + e.what());
  }
  return FromJson(j);
}

KeywordOutcome CamouflageKeyword(std::u32string_view word, Technique technique,
                                 const PipelineConfig& cfg,
                                 const Syllabifier& syl,
                                 const SubstitutionTable& table,
                                 RandomSource& rng) {
  KeywordOutcome outcome;
  outcome.technique = technique;
  for (int attempt = 0; attempt <= cfg.max_redraws; ++attempt) {
    outcome.result = ApplyOnce(word, technique, cfg, syl, table, rng);
    outcome.attempts = attempt + 1;
    if (outcome.result.applied || outcome.result.inapplicable) break;
  }
  return outcome;
}

AnnotatedDocument CamouflageDocument(const SourceDocument& doc,
                                     const PipelineConfig& cfg,
                                     RandomSource& rng,
                                     const PipelineContext& ctx) {
  AnnotatedDocument out;
  out.language = doc.language;
  out.source = doc.source;
  ProvenanceRecord prov;
  prov.original_text = doc.text;
  prov.seed = rng.seed();

  KeywordRequest req;
  req.text = doc.text;
  req.max_keywords = cfg.max_keywords;
  req.forced_keywords = cfg.forced_keywords;
  req.language = doc.language;
  const auto hits =
      ctx.extractor ? ctx.extractor->Extract(req) : ExtractKeywords(req);

  const std::u32string text = DecodeUtf8(doc.text);
  const Syllabifier syl = Syllabifier::ForLanguage(doc.language);
  std::u32string result;
  size_t cursor = 0;
  for (const KeywordHit& hit : hits) {
    if (hit.start < cursor || hit.end > text.size()) {
      throw Error(ErrorCode::kInvariant, "keyword hits overlap or overrun");
    }
    prov.extracted_keywords.push_back(hit.surface);
    result.append(text, cursor, hit.start - cursor);
    cursor = hit.end;
    const auto word =
        std::u32string_view(text).substr(hit.start, hit.end - hit.start);

    const Technique technique = DrawTechnique(cfg, rng);
    KeywordOutcome outcome =
        CamouflageKeyword(word, technique, cfg, syl, *ctx.table, rng);
    if (!outcome.result.applied) {
      result.append(word);
      continue;
    }
    CamouflagedKeyword kw;
    kw.original = EncodeUtf8(word);
    kw.original_start = hit.start;
    kw.original_end = hit.end;
    kw.camouflaged = EncodeUtf8(outcome.result.text);
    kw.start = result.size();
    result.append(outcome.result.text);
    kw.end = result.size();
    kw.label = LabelFor(technique);
    kw.params = {{"technique", TechniqueName(technique)},
                 {"attempts", outcome.attempts},
                 {"forced", hit.forced},
                 {"draws", std::move(outcome.result.params)}};
    out.spans.push_back({kw.start, kw.end, kw.label});
    prov.keywords.push_back(std::move(kw));
  }
  result.append(text, cursor, std::u32string::npos);
  out.text = EncodeUtf8(result);
  out.provenance = std::move(prov);
  return out;
}

std::vector<AnnotatedDocument> CamouflageCorpus(
    const std::vector<SourceDocument>& docs, const PipelineConfig& cfg,
    int workers, const PipelineContext& ctx) {
  cfg.Validate();
  std::vector<AnnotatedDocument> out(docs.size());
  std::vector<std::exception_ptr> errors(docs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < docs.size(); i = next++) {
      try {
        RandomSource rng(RandomSource::DeriveSeed(cfg.seed, i));
        out[i] = CamouflageDocument(docs[i], cfg, rng, ctx);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, workers);
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < n; ++t) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace camoforge
