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

// Command-line front end: camouflage, generate, convert, split, evaluate and
// inspect.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 data error,
// 3 internal invariant violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "camoforge/camouflage.h"
#include "camoforge/data_paths.h"
#include "camoforge/dataset.h"
#include "camoforge/errors.h"
#include "camoforge/eval.h"
#include "camoforge/formats.h"
#include "camoforge/keywords.h"
#include "camoforge/pipeline.h"
#include "camoforge/substitution_table.h"
#include "camoforge/syllabify.h"
#include "camoforge/utf8.h"

namespace camoforge {
namespace {

using OJson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

// Options shared by the commands that run the generator.
struct GeneratorOptions {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::string technique;
  std::string keywords;
  std::optional<double> chg_prb;
  std::string table_path;
};

void AddGeneratorOptions(CLI::App* cmd, GeneratorOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON generator configuration");
  cmd->add_option("--seed", opts.seed,
                  "Master seed (random and printed when omitted)");
  cmd->add_option("--technique", opts.technique, "Force a technique")
      ->check(CLI::IsMember({"leet", "punct", "inversion", "mix", "auto"}));
  cmd->add_option("--keywords", opts.keywords,
                  "Comma-separated keywords that are always camouflaged");
  cmd->add_option("--chg-prb", opts.chg_prb, "Override leet change_prb")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--table", opts.table_path,
                  "Substitution table TSV (default: <data>/leet/default.tsv if "
                  "present, else the built-in table)");
}

std::vector<std::string> SplitCommaList(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

uint64_t RandomSeed() {
  std::random_device rd;
  return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

// Resolves the configuration and the seed; a drawn seed is logged so the run
// can be replayed.
PipelineConfig BuildConfig(const GeneratorOptions& opts) {
  PipelineConfig cfg;
  bool config_has_seed = false;
  if (!opts.config_path.empty()) {
    cfg = PipelineConfig::LoadFile(opts.config_path);
    std::ifstream in(opts.config_path);
    config_has_seed = OJson::parse(in, nullptr, false).contains("seed");
  }
  if (!opts.technique.empty()) cfg.technique = *ParseTechnique(opts.technique);
  if (!opts.keywords.empty())
    cfg.forced_keywords = SplitCommaList(opts.keywords);
  if (opts.chg_prb) cfg.leet.change_prb = *opts.chg_prb;
  if (opts.seed) {
    cfg.seed = *opts.seed;
  } else if (!config_has_seed) {
    cfg.seed = RandomSeed();
    std::cerr << "seed: " << cfg.seed << "\n";
  }
  cfg.Validate();
  return cfg;
}

std::unique_ptr<SubstitutionTable> LoadTable(const std::string& explicit_path) {
  std::string path = explicit_path;
  if (path.empty()) {
    const auto candidate =
        std::filesystem::path(DataDir()) / "leet" / "default.tsv";
    if (std::filesystem::exists(candidate)) path = candidate.string();
  }
  if (path.empty()) return nullptr;
  return std::make_unique<SubstitutionTable>(SubstitutionTable::LoadFile(path));
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return in;
}

// "-" selects stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void WriteDocuments(const std::vector<AnnotatedDocument>& docs,
                    const std::string& format, bool plain, std::ostream& out) {
  if (format == "spans") {
    WriteSpansJsonl(docs, out);
    return;
  }
  const TagScheme scheme = *ParseTagScheme(format);
  std::vector<TokenizedDocument> tagged;
  tagged.reserve(docs.size());
  for (const auto& doc : docs) tagged.push_back(ToTagged(doc, scheme));
  WriteConll(tagged, out, !plain);
}

std::vector<AnnotatedDocument> ReadDocuments(const std::string& path,
                                             const std::string& format) {
  std::ifstream in = OpenInput(path);
  if (format == "spans") return ReadSpansJsonl(in);
  const TagScheme scheme = *ParseTagScheme(format);
  std::vector<AnnotatedDocument> out;
  for (const auto& tok : ReadConll(in)) out.push_back(FromTagged(tok, scheme));
  return out;
}

// ---- camouflage ---------------------------------------------------------

struct CamouflageArgs {
  GeneratorOptions gen;
  std::string word;
  std::string text;
  std::string lang = "en";
  bool spans = false;
  bool json = false;
};

int RunCamouflage(const CamouflageArgs& args) {
  const PipelineConfig cfg = BuildConfig(args.gen);
  const auto table = LoadTable(args.gen.table_path);
  PipelineContext ctx;
  if (table) ctx.table = table.get();
  RandomSource rng(cfg.seed);

  AnnotatedDocument doc;
  if (!args.word.empty()) {
    const std::u32string word = DecodeUtf8(args.word);
    const Technique technique = DrawTechnique(cfg, rng);
    const Syllabifier syl = Syllabifier::ForLanguage(args.lang);
    KeywordOutcome outcome =
        CamouflageKeyword(word, technique, cfg, syl, *ctx.table, rng);
    doc.text = outcome.result.Utf8();
    doc.language = args.lang;
    if (outcome.result.applied) {
      doc.spans.push_back({0, outcome.result.text.size(), LabelFor(technique)});
      ProvenanceRecord prov;
      prov.original_text = args.word;
      prov.seed = cfg.seed;
      prov.extracted_keywords = {args.word};
      CamouflagedKeyword kw;
      kw.original = args.word;
      kw.original_end = word.size();
      kw.camouflaged = doc.text;
      kw.end = outcome.result.text.size();
      kw.label = LabelFor(technique);
      kw.params = {{"technique", TechniqueName(technique)},
                   {"attempts", outcome.attempts},
                   {"forced", true},
                   {"draws", outcome.result.params}};
      prov.keywords.push_back(std::move(kw));
      doc.provenance = std::move(prov);
    }
  } else {
    SourceDocument src{args.text, args.lang, ""};
    doc = CamouflageDocument(src, cfg, rng, ctx);
  }

  if (args.json) {
    std::cout << DocumentToJsonLine(doc) << "\n";
    return kExitOk;
  }
  std::cout << doc.text << "\n";
  if (args.spans) {
    for (const Span& s : doc.spans) {
      std::cout << s.start << "\t" << s.end << "\t" << EntityLabelName(s.label)
                << "\t" << SliceScalars(doc.text, s.start, s.end) << "\n";
    }
  }
  return kExitOk;
}

// ---- generate -----------------------------------------------------------

struct GenerateArgs {
  GeneratorOptions gen;
  std::string input;
  std::string output;
  std::string format = "spans";
  std::string lang;
  std::string rejections;
  std::string summary;
  int workers = 1;
  bool plain = false;
  bool json = false;
};

int RunGenerate(const GenerateArgs& args) {
  const PipelineConfig cfg = BuildConfig(args.gen);
  const auto table = LoadTable(args.gen.table_path);
  PipelineContext ctx;
  if (table) ctx.table = table.get();

  std::ifstream in = OpenInput(args.input);
  std::vector<SourceDocument> sources;
  std::vector<size_t> line_of;
  size_t unreadable = 0;
  size_t too_short = 0;
  size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      SourceDocument doc = SourceFromJson(OJson::parse(line));
      const bool has_lang = OJson::parse(line).contains("language");
      if (!has_lang && !args.lang.empty()) doc.language = args.lang;
      if (ScalarLength(doc.text) <= 3) {
        ++too_short;
        std::cerr << "line " << line_no
                  << ": text shorter than 4 characters, skipped\n";
        continue;
      }
      sources.push_back(std::move(doc));
      line_of.push_back(line_no);
    } catch (const std::exception& e) {
      ++unreadable;
      std::cerr << "line " << line_no << ": unreadable input: " << e.what()
                << "\n";
    }
  }

  std::vector<AnnotatedDocument> generated =
      CamouflageCorpus(sources, cfg, args.workers, ctx);
  std::array<size_t, kNumEntityLabels> generated_labels{};
  size_t generated_spans = 0;
  for (const auto& doc : generated) {
    for (const Span& s : doc.spans) {
      ++generated_labels[static_cast<int>(s.label)];
      ++generated_spans;
    }
  }
  const size_t generated_count = generated.size();
  FilterResult filtered = QualityFilter(std::move(generated));

  {
    Output out(args.output);
    WriteDocuments(filtered.kept, args.format, args.plain, out.stream());
  }
  const std::string rejections_path = !args.rejections.empty() ? args.rejections
                                      : args.output == "-"
                                          ? std::string()
                                          : args.output + ".rejections.jsonl";
  std::map<std::string, size_t> by_reason;
  for (const auto& r : filtered.rejected)
    ++by_reason[RejectReasonName(r.reason)];
  if (!rejections_path.empty()) {
    Output out(rejections_path);
    for (const auto& r : filtered.rejected) {
      OJson rec = {{"index", r.index},
                   {"line", line_of[r.index]},
                   {"reason", RejectReasonName(r.reason)},
                   {"document", DocumentToJson(r.doc)}};
      out.stream() << rec.dump() << "\n";
    }
  }

  OJson label_counts = OJson::object();
  OJson frequencies = OJson::object();
  for (EntityLabel l : kAllEntityLabels) {
    label_counts[EntityLabelName(l)] =
        filtered.label_counts[static_cast<int>(l)];
    frequencies[EntityLabelName(l)] =
        generated_spans == 0
            ? 0.0
            : static_cast<double>(generated_labels[static_cast<int>(l)]) /
                  static_cast<double>(generated_spans);
  }
  OJson reasons = OJson::object();
  for (const char* name : {"DUPLICATE", "WHITESPACE_BOUNDARY",
                           "SENTENCE_CROSSING", "INVALID_SPAN"}) {
    reasons[name] = by_reason[name];
  }
  const OJson summary = {
      {"seed", cfg.seed},
      {"documents_in", sources.size() + too_short + unreadable},
      {"unreadable_lines", unreadable},
      {"skipped_short", too_short},
      {"generated", generated_count},
      {"kept", filtered.kept.size()},
      {"rejected", filtered.rejected.size()},
      {"rejections_by_reason", reasons},
      {"entity_counts", label_counts},
      {"documents_without_entities", filtered.documents_without_entities},
      {"generated_entities", generated_spans},
      {"technique_frequencies", frequencies}};

  const std::string summary_path = !args.summary.empty() ? args.summary
                                   : args.output == "-"
                                       ? std::string()
                                       : args.output + ".summary.json";
  if (!summary_path.empty()) {
    Output out(summary_path);
    out.stream() << summary.dump(2) << "\n";
  }
  if (args.json) {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cerr << "seed " << cfg.seed << ": "
              << summary["documents_in"].get<size_t>() << " documents in, "
              << filtered.kept.size() << " kept, " << filtered.rejected.size()
              << " rejected, " << unreadable << " unreadable lines\n";
    for (const auto& [name, freq] : frequencies.items()) {
      std::cerr << "  " << name << ": " << label_counts[name].get<size_t>()
                << " entities kept, technique frequency " << freq.get<double>()
                << "\n";
    }
  }
  return kExitOk;
}

// ---- convert ------------------------------------------------------------

struct ConvertArgs {
  std::string input;
  std::string output = "-";
  std::string from = "spans";
  std::string to = "biluo";
  bool plain = false;
};

int RunConvert(const ConvertArgs& args) {
  const std::vector<AnnotatedDocument> docs =
      ReadDocuments(args.input, args.from);
  Output out(args.output);
  WriteDocuments(docs, args.to, args.plain, out.stream());
  return kExitOk;
}

// ---- split --------------------------------------------------------------

struct SplitArgs {
  std::string input;
  std::string output_dir = ".";
  std::optional<uint64_t> seed;
  std::vector<double> ratios = {0.81, 0.09, 0.10};
  bool json = false;
};

int RunSplit(const SplitArgs& args) {
  if (args.ratios.size() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "--ratios takes three values");
  }
  uint64_t seed = args.seed.value_or(0);
  if (!args.seed) {
    seed = RandomSeed();
    std::cerr << "seed: " << seed << "\n";
  }
  std::ifstream in = OpenInput(args.input);
  std::vector<AnnotatedDocument> docs = ReadSpansJsonl(in);
  RandomSource rng(seed);
  const SplitSet splits = StratifiedSplit(
      std::move(docs), {args.ratios[0], args.ratios[1], args.ratios[2]}, rng);
  for (const auto& w : splits.warnings) std::cerr << "warning: " << w << "\n";

  std::filesystem::create_directories(args.output_dir);
  const std::pair<const char*, const std::vector<AnnotatedDocument>*> parts[] =
      {{"train", &splits.train}, {"dev", &splits.dev}, {"test", &splits.test}};
  OJson sizes = OJson::object();
  for (const auto& [name, part] : parts) {
    Output out((std::filesystem::path(args.output_dir) /
                (std::string(name) + ".jsonl"))
                   .string());
    WriteSpansJsonl(*part, out.stream());
    sizes[name] = part->size();
  }
  const auto overlap = CheckSplitOverlap(splits);
  const OJson summary = {{"seed", seed},
                         {"sizes", sizes},
                         {"warnings", splits.warnings},
                         {"overlap_violations", overlap.size()}};
  if (args.json) {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cerr << "train " << splits.train.size() << ", dev "
              << splits.dev.size() << ", test " << splits.test.size() << "\n";
  }
  if (!overlap.empty()) {
    for (const auto& v : overlap) std::cerr << "overlap: " << v.text << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

// ---- evaluate -----------------------------------------------------------

struct EvaluateArgs {
  std::string gold;
  std::string pred;
  std::string format = "spans";
  bool breakdown = false;
  bool json = false;
};

int RunEvaluate(const EvaluateArgs& args) {
  const auto gold = ReadDocuments(args.gold, args.format);
  const auto pred = ReadDocuments(args.pred, args.format);
  const MetricsReport report = Score(gold, pred);
  std::map<std::string, MetricsReport> by_source;
  if (args.breakdown) by_source = ScoreBySource(gold, pred);
  if (args.json) {
    OJson j = ReportToJson(report);
    if (args.breakdown) {
      OJson b = OJson::object();
      for (const auto& [source, m] : by_source) {
        b[source.empty() ? "(none)" : source] = ReportToJson(m);
      }
      j["by_source"] = std::move(b);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << RenderReport(report, args.breakdown ? &by_source : nullptr);
  }
  return kExitOk;
}

// ---- inspect ------------------------------------------------------------

struct InspectArgs {
  std::string word;
  std::string text;
  std::string input;
  std::string lang = "en";
  int max_keywords = 5;
  std::string table_path;
};

int RunInspect(const InspectArgs& args) {
  OJson out;
  if (!args.word.empty()) {
    const Syllabifier syl = Syllabifier::ForLanguage(args.lang);
    const auto table = LoadTable(args.table_path);
    const SubstitutionTable& t = table ? *table : SubstitutionTable::Default();
    out["word"] = args.word;
    out["language"] = syl.language();
    out["hyphenation_patterns"] = syl.uses_patterns();
    out["syllables"] = syl.Split(std::string_view(args.word));
    OJson subs = OJson::object();
    for (char32_t c : DecodeUtf8(args.word)) {
      const std::string key = EncodeUtf8(std::u32string(1, ToLower(c)));
      if (subs.contains(key)) continue;
      const auto* list = t.Find(c);
      if (list == nullptr) continue;
      OJson entries = OJson::array();
      for (const Replacement& r : *list) {
        entries.push_back({{"level", ComplexityLevelName(r.level)},
                           {"replacement", EncodeUtf8(r.text)}});
      }
      subs[key] = std::move(entries);
    }
    out["substitutions"] = std::move(subs);
  } else if (!args.text.empty()) {
    KeywordRequest req;
    req.text = args.text;
    req.language = args.lang;
    req.max_keywords = args.max_keywords;
    OJson hits = OJson::array();
    for (const KeywordHit& h : ExtractKeywords(req)) {
      hits.push_back({{"surface", h.surface},
                      {"start", h.start},
                      {"end", h.end},
                      {"score", h.score},
                      {"forced", h.forced}});
    }
    out["keywords"] = std::move(hits);
  } else if (!args.input.empty()) {
    std::ifstream in = OpenInput(args.input);
    std::vector<LineError> errors;
    const auto docs = ReadSpansJsonl(in, &errors);
    std::array<size_t, kNumEntityLabels> counts{};
    size_t invalid = 0;
    size_t with_provenance = 0;
    std::map<std::string, size_t> languages;
    std::map<std::string, size_t> sources;
    for (const auto& doc : docs) {
      try {
        ValidateSpans(doc);
      } catch (const Error&) {
        ++invalid;
      }
      for (const Span& s : doc.spans) ++counts[static_cast<int>(s.label)];
      if (doc.provenance) ++with_provenance;
      ++languages[doc.language];
      ++sources[doc.source];
    }
    OJson labels = OJson::object();
    for (EntityLabel l : kAllEntityLabels) {
      labels[EntityLabelName(l)] = counts[static_cast<int>(l)];
    }
    out["documents"] = docs.size();
    out["unreadable_lines"] = errors.size();
    out["invalid_span_documents"] = invalid;
    out["with_provenance"] = with_provenance;
    out["entities"] = std::move(labels);
    out["languages"] = languages;
    out["sources"] = sources;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "inspect needs --word, --text or --input");
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidConfig:
      return kExitUsage;
    case ErrorCode::kParse:
    case ErrorCode::kIo:
    case ErrorCode::kAlignment:
    case ErrorCode::kScheme:
      return kExitData;
    case ErrorCode::kInvariant:
      return kExitInternal;
  }
  return kExitInternal;
}

int Main(int argc, char** argv) {
  CLI::App app{"Word camouflage generator, corpus builder and evaluator"};
  app.require_subcommand(1);
  std::string data_dir;
  app.add_option(
      "--data-dir", data_dir,
      "Directory with bundled data (CAMOFORGE_DATA_DIR takes precedence)");

  CamouflageArgs cam;
  auto* cam_cmd =
      app.add_subcommand("camouflage", "Camouflage one word or text");
  AddGeneratorOptions(cam_cmd, cam.gen);
  auto* word_opt = cam_cmd->add_option("--word", cam.word, "Single word");
  auto* text_opt = cam_cmd->add_option("--text", cam.text, "Whole text");
  word_opt->excludes(text_opt);
  cam_cmd->add_option("--lang", cam.lang, "Language code");
  cam_cmd->add_flag("--spans", cam.spans, "Also print the span list");
  cam_cmd->add_flag("--json", cam.json, "Print the annotated document as JSON");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Build an annotated corpus");
  AddGeneratorOptions(gen_cmd, gen.gen);
  gen_cmd
      ->add_option("input", gen.input,
                   "Input JSON lines {text, language, source}")
      ->required();
  gen_cmd->add_option("-o,--output", gen.output, "Output path ('-' for stdout)")
      ->required();
  gen_cmd->add_option("--format", gen.format, "Output format")
      ->check(CLI::IsMember({"spans", "biluo", "iob"}));
  gen_cmd->add_option("--lang", gen.lang, "Language for lines without one");
  gen_cmd->add_option("--workers", gen.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--rejections", gen.rejections,
                      "Rejection log (default: <output>.rejections.jsonl)");
  gen_cmd->add_option("--summary", gen.summary,
                      "Summary JSON (default: <output>.summary.json)");
  gen_cmd->add_flag("--plain", gen.plain,
                    "Omit '# text' metadata in column output");
  gen_cmd->add_flag("--json", gen.json, "Print the summary as JSON on stdout");

  ConvertArgs conv;
  auto* conv_cmd =
      app.add_subcommand("convert", "Convert between span JSON, BILUO and IOB");
  conv_cmd->add_option("input", conv.input, "Input file")->required();
  conv_cmd->add_option("-o,--output", conv.output,
                       "Output path ('-' for stdout)");
  conv_cmd->add_option("--from", conv.from)
      ->check(CLI::IsMember({"spans", "biluo", "iob"}));
  conv_cmd->add_option("--to,--format", conv.to)
      ->check(CLI::IsMember({"spans", "biluo", "iob"}));
  conv_cmd->add_flag("--plain", conv.plain,
                     "Omit '# text' metadata in column output");

  SplitArgs split;
  auto* split_cmd =
      app.add_subcommand("split", "Stratified train/dev/test split");
  split_cmd->add_option("input", split.input, "Span JSON lines")->required();
  split_cmd->add_option("-o,--output-dir", split.output_dir,
                        "Directory for the splits");
  split_cmd->add_option("--seed", split.seed,
                        "Seed (random and printed when omitted)");
  split_cmd->add_option("--ratios", split.ratios, "Train, dev and test ratios")
      ->expected(3)
      ->delimiter(',');
  split_cmd->add_flag("--json", split.json, "Print a JSON summary");

  EvaluateArgs eval;
  auto* eval_cmd =
      app.add_subcommand("evaluate", "Score predictions against gold spans");
  eval_cmd->add_option("gold", eval.gold, "Gold file")->required();
  eval_cmd->add_option("pred", eval.pred, "Prediction file")->required();
  eval_cmd->add_option("--format", eval.format, "Format of both files")
      ->check(CLI::IsMember({"spans", "biluo", "iob"}));
  eval_cmd->add_flag("--breakdown", eval.breakdown,
                     "Add one section per source");
  eval_cmd->add_flag("--json", eval.json, "Print only the JSON report");

  InspectArgs insp;
  auto* insp_cmd =
      app.add_subcommand("inspect", "Show syllables, keywords or corpus stats");
  insp_cmd->add_option("--word", insp.word,
                       "Syllables and substitutions of a word");
  insp_cmd->add_option("--text", insp.text, "Keyword ranking of a text");
  insp_cmd->add_option("--input", insp.input,
                       "Statistics of a span JSON lines file");
  insp_cmd->add_option("--lang", insp.lang, "Language code");
  insp_cmd->add_option("--max-keywords", insp.max_keywords)
      ->check(CLI::PositiveNumber);
  insp_cmd->add_option("--table", insp.table_path, "Substitution table TSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!data_dir.empty()) SetDataDir(data_dir);

  try {
    if (*cam_cmd) {
      if (cam.word.empty() && cam.text.empty()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "camouflage needs --word or --text");
      }
      return RunCamouflage(cam);
    }
    if (*gen_cmd) return RunGenerate(gen);
    if (*conv_cmd) return RunConvert(conv);
    if (*split_cmd) return RunSplit(split);
    if (*eval_cmd) return RunEvaluate(eval);
    if (*insp_cmd) return RunInspect(insp);
  } catch (const TaggingError& e) {
    std::cerr << "error: " << e.what() << " (index " << e.index() << ")\n";
    return ExitCodeFor(e.code());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace camoforge

int main(int argc, char** argv) { return camoforge::Main(argc, argv); }
