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

// End-to-end acceptance checks. Prints one PASS or FAIL line per criterion
// and exits nonzero when any of them fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "camoforge/camouflage.h"
#include "camoforge/dataset.h"
#include "camoforge/eval.h"
#include "camoforge/formats.h"
#include "camoforge/pipeline.h"
#include "camoforge/syllabify.h"
#include "camoforge/utf8.h"
#include "cli_runner.h"
#include "oracles.h"
#include "score_oracle.h"

namespace camoforge {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::vector<SourceDocument> LoadFixture() {
  std::ifstream in(std::string(CAMOFORGE_TEST_DATA_DIR) + "/corpus_1000.jsonl");
  return ReadSourceJsonl(in);
}

Outcome InversionOracle() {
  Outcome o;
  const auto t0 = Clock::now();
  struct Case {
    const char* lang;
    std::u32string word;
    std::u32string expected;
  };
  const Case cases[] = {{"es", U"Vacuna", U"nacuVa"},
                        {"es", U"Covid", U"vidCo"},
                        {"es", U"Plandemia", U"dePlanmia"},
                        {"en", U"Inmigrant", U"migrantIn"},
                        {"en", U"Genocide", U"oGencide"}};
  const InvConfig cfg;
  for (const Case& c : cases) {
    const auto swaps = oracle::EnumerateSwaps(
        Syllabifier::ForLanguage(c.lang).Split(c.word), cfg.max_distance_hi);
    if (!swaps.contains(c.expected))
      o.Fail(EncodeUtf8(c.expected) + " not reachable");
  }
  const double elapsed = Seconds(t0);
  if (elapsed >= 1.0) o.Fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "5/5 reachable in " + std::to_string(elapsed) + " s";
  return o;
}

Outcome TechniqueDistribution() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::string, std::string>> words = {
      {"vaccination", "en"}, {"government", "en"}, {"pandemic", "en"},
      {"genocide", "en"},    {"immigrant", "en"},  {"conspiracy", "en"},
      {"democracy", "en"},   {"violence", "en"},   {"vacuna", "es"},
      {"plandemia", "es"},   {"gobierno", "es"},   {"mentira", "es"},
      {"libertad", "es"},    {"pandemia", "es"},   {"dictadura", "es"},
      {"terrorismo", "es"}};
  std::vector<SourceDocument> docs;
  for (size_t i = 0; i < 10000; ++i) {
    docs.push_back(
        {words[i % words.size()].first, words[i % words.size()].second, ""});
  }
  PipelineConfig cfg;
  cfg.seed = 1;
  const auto out = CamouflageCorpus(docs, cfg, 4);
  std::array<double, kNumEntityLabels> counts{};
  for (const auto& d : out) {
    if (d.spans.size() != 1) {
      o.Fail("document \"" + d.text + "\" has " +
             std::to_string(d.spans.size()) + " spans");
      return o;
    }
    ++counts[static_cast<int>(d.spans[0].label)];
  }
  const std::array<double, kNumEntityLabels> expected = {0.405, 0.225, 0.100,
                                                         0.270};
  std::ostringstream detail;
  for (int l = 0; l < kNumEntityLabels; ++l) {
    const double f = counts[l] / 10000.0;
    detail << EntityLabelName(static_cast<EntityLabel>(l)) << "=" << f << " ";
    if (std::abs(f - expected[l]) > 0.02) o.Fail(detail.str());
  }
  const double elapsed = Seconds(t0);
  detail << "in " << elapsed << " s";
  if (elapsed >= 60.0) o.Fail(detail.str());
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome RoundTrips() {
  Outcome o;
  PipelineConfig cfg;
  cfg.seed = 3;
  const auto sources = LoadFixture();
  const auto docs = CamouflageCorpus(sources, cfg, 4);
  size_t punct = 0;
  size_t spans = 0;
  for (size_t i = 0; i < docs.size(); ++i) {
    const auto& d = docs[i];
    spans += d.spans.size();
    if (ReconstructOriginal(d) != sources[i].text)
      o.Fail("reconstruction, document " + std::to_string(i));
    for (const auto& kw : d.provenance->keywords) {
      if (kw.label != EntityLabel::kPunctCamo) continue;
      ++punct;
      if (oracle::StripSymbols(DecodeUtf8(kw.camouflaged), cfg.punct.symbols) !=
          DecodeUtf8(kw.original)) {
        o.Fail("punctuation strip of " + kw.camouflaged);
      }
    }
    const auto biluo = ToBiluo(d);
    if (FromTagged(biluo, TagScheme::kBiluo).spans != d.spans ||
        ToBiluo(FromTagged(biluo, TagScheme::kBiluo)).tags != biluo.tags) {
      o.Fail("BILUO round trip, document " + std::to_string(i));
    }
    const auto iob = ToIob(d);
    if (BiluoToIob(biluo.tags) != iob.tags ||
        IobToBiluo(iob.tags) != biluo.tags) {
      o.Fail("BILUO/IOB conversion, document " + std::to_string(i));
    }
  }
  if (punct == 0) o.Fail("no PUNCT_CAMO spans generated");
  if (o.pass) {
    o.detail = std::to_string(docs.size()) + " documents, " +
               std::to_string(spans) + " spans, " + std::to_string(punct) +
               " punctuation spans";
  }
  return o;
}

Outcome EnumerationSoundness() {
  Outcome o;
  SubstitutionTable table;
  table.Add(U'a', U"4", ComplexityLevel::kBasic);
  table.Add(U'a', U"/\\", ComplexityLevel::kAdvanced);
  table.Add(U'e', U"3", ComplexityLevel::kBasic);
  table.Validate();
  const LeetConfig cfg;
  const std::vector<std::u32string> words = {
      U"banana", U"apple", U"cake",  U"area",   U"ease",   U"agree",  U"eagle",
      U"bread",  U"peace", U"sea",   U"tea",    U"camera", U"escape", U"eat",
      U"table",  U"leave", U"Abate", U"access", U"ae",     U"xyz"};
  size_t outputs = 0;
  for (const auto& w : words) {
    const auto allowed = oracle::EnumerateLeet(w, table, cfg);
    std::set<std::u32string> seen;
    for (uint64_t seed = 0; seed < 10000; ++seed) {
      RandomSource rng(seed);
      const auto r = Leetspeak(w, table, cfg, rng);
      if (!allowed.contains(r.text)) {
        o.Fail(EncodeUtf8(w) + " -> " + r.Utf8());
        return o;
      }
      seen.insert(r.text);
    }
    outputs += seen.size();
  }
  o.detail = "200000 draws, " + std::to_string(outputs) +
             " distinct outputs, all enumerated";
  return o;
}

Outcome FilterConformance() {
  Outcome o;
  auto doc = [](std::string text, std::vector<Span> spans) {
    AnnotatedDocument d;
    d.text = std::move(text);
    d.spans = std::move(spans);
    d.language = "en";
    d.source = "fixture";
    return d;
  };
  constexpr auto kLeet = EntityLabel::kLeetspeak;
  constexpr auto kMix = EntityLabel::kMix;
  const std::vector<AnnotatedDocument> docs = {
      doc("The v4ccine is here.", {{4, 11, kLeet}}),
      doc("Nothing to see.", {}),
      doc("Some c.o.v.i.d talk. More text follows.", {{5, 14, kMix}}),
      doc("The v4ccine is here.", {{4, 11, kLeet}}),  // duplicate
      doc("Fr4ud everywhere!", {{0, 5, kLeet}}),
      doc("Masks w0rk well.", {{5, 10, kLeet}}),  // leading space
      doc("A second l1e. And more.", {{9, 12, kLeet}}),
      doc("Crossing h3re. Now it goes on.",
          {{9, 20, kLeet}}),  // crosses a sentence end
      doc("Gr33n pass.", {{0, 5, kLeet}}),
      doc("Vidco is inverted.", {{0, 5, EntityLabel::kInvCamo}}),
      doc("Plain sentence without entities.", {}),
      doc("Final d.o.c here.", {{6, 11, EntityLabel::kPunctCamo}}),
  };
  const std::map<size_t, RejectReason> expected = {
      {3, RejectReason::kDuplicate},
      {5, RejectReason::kWhitespaceBoundary},
      {7, RejectReason::kSentenceCrossing}};
  const FilterResult r = QualityFilter(docs);
  std::map<size_t, RejectReason> got;
  for (const auto& rej : r.rejected) got[rej.index] = rej.reason;
  if (got != expected) {
    std::string s;
    for (const auto& [i, reason] : got)
      s += std::to_string(i) + ":" + RejectReasonName(reason) + " ";
    o.Fail("rejections " + s);
  }
  std::vector<std::string> kept_expected;
  for (size_t i = 0; i < docs.size(); ++i) {
    if (!expected.contains(i)) kept_expected.push_back(docs[i].text);
  }
  std::vector<std::string> kept;
  for (const auto& d : r.kept) kept.push_back(d.text);
  if (kept != kept_expected) o.Fail("kept partition differs");
  if (o.pass) o.detail = "9 kept, 3 rejected with the expected reasons";
  return o;
}

Outcome SplitConformance() {
  Outcome o;
  RandomSource gen(17);
  const char* langs[] = {"en", "es", "fr", "it", "de"};
  const char* sources[] = {"news-commentary", "paracrawl", "ted2020",
                           "wikimatrix"};
  std::vector<AnnotatedDocument> docs;
  for (int i = 0; i < 10000; ++i) {
    AnnotatedDocument d;
    d.text = "synthetic document number " + std::to_string(i) +
             " with some words in it";
    d.language = langs[gen.UniformInt(0, 4)];
    d.source = sources[gen.UniformInt(0, 3)];
    const int n = static_cast<int>(gen.UniformInt(0, 3));
    for (int k = 0; k < n; ++k) {
      const size_t start = static_cast<size_t>(k) * 10;
      d.spans.push_back({start, start + 9,
                         static_cast<EntityLabel>(gen.WeightedChoice(
                             std::array<double, 4>{0.405, 0.225, 0.1, 0.27}))});
    }
    docs.push_back(std::move(d));
  }
  RandomSource rng(99);
  const SplitSet s = StratifiedSplit(docs, SplitRatios(), rng);
  const std::array<std::pair<const std::vector<AnnotatedDocument>*, size_t>, 3>
      parts = {
          std::pair{&s.train, size_t{8100}}, {&s.dev, 900}, {&s.test, 1000}};
  std::ostringstream detail;
  detail << "sizes " << s.train.size() << "/" << s.dev.size() << "/"
         << s.test.size();
  for (const auto& [part, target] : parts) {
    if (std::abs(static_cast<long>(part->size()) - static_cast<long>(target)) >
        1) {
      o.Fail(detail.str());
    }
  }
  if (!CheckSplitOverlap(s).empty()) o.Fail("overlapping texts");

  // Per label: share of the split's entities, and share of its documents that
  // contain the label.
  double worst = 0.0;
  for (int l = 0; l < kNumEntityLabels; ++l) {
    std::vector<double> entity_share, doc_share;
    for (const auto& [part, target] : parts) {
      double entities = 0, with_label = 0, label_entities = 0;
      for (const auto& d : *part) {
        bool has = false;
        for (const Span& sp : d.spans) {
          ++entities;
          if (static_cast<int>(sp.label) == l) {
            ++label_entities;
            has = true;
          }
        }
        with_label += has;
      }
      entity_share.push_back(label_entities / entities);
      doc_share.push_back(with_label / static_cast<double>(part->size()));
    }
    for (const auto* v : {&entity_share, &doc_share}) {
      const auto [lo, hi] = std::minmax_element(v->begin(), v->end());
      worst = std::max(worst, *hi - *lo);
    }
  }
  detail << ", largest label proportion gap " << worst * 100 << " pp";
  if (worst > 0.02) o.Fail(detail.str());
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome MetricsOracle() {
  Outcome o;
  auto doc = [](std::vector<Span> spans) {
    AnnotatedDocument d;
    d.text = "0123456789abcdefghijklmnopqrst";
    d.spans = std::move(spans);
    return d;
  };
  constexpr auto kLeet = EntityLabel::kLeetspeak;
  constexpr auto kPunct = EntityLabel::kPunctCamo;
  constexpr auto kInv = EntityLabel::kInvCamo;
  constexpr auto kMix = EntityLabel::kMix;

  const std::vector<AnnotatedDocument> all = {
      doc({{0, 3, kLeet}, {5, 8, kPunct}, {10, 12, kInv}, {20, 25, kMix}})};
  const MetricsReport perfect = Score(all, all);
  bool diagonal = true;
  for (int r = 0; r < kConfusionSize; ++r) {
    for (int c = 0; c < kConfusionSize; ++c) {
      diagonal &=
          perfect.confusion[r][c] == (r == c && r != kOutside ? 1u : 0u);
    }
  }
  if (perfect.f1_micro != 1.0 || perfect.f1_macro != 1.0 ||
      perfect.f1_weighted != 1.0 || !diagonal) {
    o.Fail("perfect prediction");
  }

  const MetricsReport missed = Score({doc({{0, 5, kLeet}})}, {doc({})});
  const auto& leet = missed.per_label[0];
  if (leet.recall != 0.0 || leet.precision != 0.0 || leet.f1 != 0.0 ||
      missed.f1_micro != 0.0) {
    o.Fail("empty prediction");
  }

  const MetricsReport half = Score({doc({{0, 5, kLeet}, {10, 15, kPunct}})},
                                   {doc({{0, 5, kLeet}, {10, 15, kInv}})});
  if (half.precision_micro != 0.5 || half.recall_micro != 0.5 ||
      half.f1_micro != 0.5 || std::abs(half.f1_macro - 1.0 / 3.0) > 1e-15 ||
      half.confusion[0][0] != 1 || half.confusion[1][2] != 1) {
    o.Fail("mislabelled prediction");
  }

  RandomSource rng(4242);
  double worst = 0.0;
  for (int instance = 0; instance < 100; ++instance) {
    std::vector<AnnotatedDocument> gold, pred;
    const int n = static_cast<int>(rng.UniformInt(1, 6));
    for (int d = 0; d < n; ++d) {
      const auto g = oracle::RandomSpans(rng);
      gold.push_back(doc(g));
      pred.push_back(doc(oracle::Perturb(g, rng)));
    }
    const MetricsReport m = Score(gold, pred);
    const oracle::BruteForce b = oracle::ScoreByHand(gold, pred);
    worst = std::max({worst, std::abs(m.f1_micro - b.micro),
                      std::abs(m.f1_macro - b.macro),
                      std::abs(m.f1_weighted - b.weighted)});
    for (int l = 0; l < kNumEntityLabels; ++l) {
      worst = std::max(worst, std::abs(m.per_label[l].f1 - b.f1.at(l)));
    }
  }
  if (worst > 1e-12)
    o.Fail("random instances differ by " + std::to_string(worst));
  if (o.pass) {
    std::ostringstream d;
    d << "3 examples exact, 100 random instances, max difference " << worst;
    o.detail = d.str();
  }
  return o;
}

Outcome Determinism() {
  Outcome o;
  testing::TempDir dir;
  const std::string fixture =
      std::string(CAMOFORGE_TEST_DATA_DIR) + "/corpus_1000.jsonl";
  auto run = [&](const std::string& name, int workers) {
    const auto r =
        testing::RunCli("generate " + testing::Quote(fixture) + " -o " +
                        testing::Quote(dir / name) + " --seed 42 --workers " +
                        std::to_string(workers));
    if (r.exit_code != 0)
      o.Fail(name + " exited with " + std::to_string(r.exit_code));
  };
  run("a.jsonl", 4);
  run("b.jsonl", 4);
  run("w1.jsonl", 1);
  run("w8.jsonl", 8);
  for (const char* suffix : {"", ".summary.json", ".rejections.jsonl"}) {
    const std::string ref =
        testing::ReadFile(dir / (std::string("a.jsonl") + suffix));
    if (ref.empty() && std::string(suffix) != ".rejections.jsonl")
      o.Fail(std::string("empty output") + suffix);
    for (const char* other : {"b.jsonl", "w1.jsonl", "w8.jsonl"}) {
      if (testing::ReadFile(dir / (std::string(other) + suffix)) != ref) {
        o.Fail(std::string(other) + suffix + " differs");
      }
    }
  }
  if (o.pass) o.detail = "two runs and 1 vs 8 workers byte-identical";
  return o;
}

}  // namespace
}  // namespace camoforge

int main() {
  using camoforge::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {
          {"1 inversion oracle", camoforge::InversionOracle},
          {"2 technique distribution", camoforge::TechniqueDistribution},
          {"3 round trips", camoforge::RoundTrips},
          {"4 enumeration soundness", camoforge::EnumerationSoundness},
          {"5 quality filter", camoforge::FilterConformance},
          {"6 stratified split", camoforge::SplitConformance},
          {"7 metrics oracle", camoforge::MetricsOracle},
          {"8 determinism", camoforge::Determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    std::printf("%s  %-26s %s\n", o.pass ? "PASS" : "FAIL", name,
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
