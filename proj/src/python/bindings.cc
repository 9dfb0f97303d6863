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

// Python extension module camoforge._core. Documents and reports cross the
// boundary as JSON text; the package __init__ decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "camoforge/data_paths.h"
#include "camoforge/dataset.h"
#include "camoforge/errors.h"
#include "camoforge/eval.h"
#include "camoforge/formats.h"
#include "camoforge/keywords.h"
#include "camoforge/pipeline.h"
#include "camoforge/syllabify.h"
#include "camoforge/utf8.h"

namespace py = pybind11;

namespace camoforge {
namespace {

PipelineConfig MakeConfig(const std::string& config_json, uint64_t seed,
                          const std::string& technique) {
  PipelineConfig cfg = config_json.empty()
                           ? PipelineConfig()
                           : PipelineConfig::FromJson(Json::parse(config_json));
  cfg.seed = seed;
  const auto t = ParseTechnique(technique);
  if (!t)
    throw Error(ErrorCode::kInvalidArgument,
                "unknown technique '" + technique + "'");
  cfg.technique = *t;
  cfg.Validate();
  return cfg;
}

std::string CamouflageText(const std::string& text, const std::string& language,
                           uint64_t seed, const std::string& technique,
                           const std::string& config_json,
                           const std::vector<std::string>& keywords) {
  PipelineConfig cfg = MakeConfig(config_json, seed, technique);
  if (!keywords.empty()) cfg.forced_keywords = keywords;
  RandomSource rng(cfg.seed);
  AnnotatedDocument doc;
  {
    py::gil_scoped_release release;
    doc = CamouflageDocument({text, language, ""}, cfg, rng);
  }
  return DocumentToJsonLine(doc);
}

std::string CamouflageWord(const std::string& word,
                           const std::string& technique,
                           const std::string& language, uint64_t seed,
                           const std::string& config_json) {
  const PipelineConfig cfg = MakeConfig(config_json, seed, technique);
  RandomSource rng(cfg.seed);
  const Technique t = DrawTechnique(cfg, rng);
  const KeywordOutcome out = CamouflageKeyword(
      DecodeUtf8(word), t, cfg, Syllabifier::ForLanguage(language),
      SubstitutionTable::Default(), rng);
  Json j = {{"text", out.result.Utf8()},
            {"technique", TechniqueName(t)},
            {"applied", out.result.applied},
            {"attempts", out.attempts},
            {"params", out.result.params}};
  return j.dump();
}

std::vector<std::string> Generate(const std::vector<std::string>& source_lines,
                                  uint64_t seed, int workers,
                                  const std::string& config_json) {
  PipelineConfig cfg = MakeConfig(config_json, seed, "auto");
  std::vector<SourceDocument> sources;
  sources.reserve(source_lines.size());
  for (const auto& line : source_lines) {
    try {
      sources.push_back(SourceFromJson(Json::parse(line)));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
  }
  std::vector<AnnotatedDocument> docs;
  {
    py::gil_scoped_release release;
    docs = CamouflageCorpus(sources, cfg, workers);
  }
  std::vector<std::string> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back(DocumentToJsonLine(d));
  return out;
}

std::vector<AnnotatedDocument> ParseDocs(
    const std::vector<std::string>& lines) {
  std::vector<AnnotatedDocument> docs;
  for (const auto& line : lines) {
    try {
      docs.push_back(DocumentFromJson(Json::parse(line)));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
  }
  return docs;
}

TagScheme SchemeOrThrow(const std::string& name) {
  const auto s = ParseTagScheme(name);
  if (!s)
    throw Error(ErrorCode::kInvalidArgument,
                "unknown tag scheme '" + name + "'");
  return *s;
}

}  // namespace
}  // namespace camoforge

PYBIND11_MODULE(_core, m) {
  using namespace camoforge;
  m.doc() = "Word camouflage generation, dataset tooling and span scoring";

  py::register_exception<Error>(m, "CamoforgeError", PyExc_ValueError);

  m.def("set_data_dir", &SetDataDir, py::arg("path"));
  m.def("data_dir", &DataDir);

  m.def(
      "syllabify",
      [](const std::string& word, const std::string& language) {
        return Syllabifier::ForLanguage(language).Split(std::string_view(word));
      },
      py::arg("word"), py::arg("language") = "en");

  m.def(
      "extract_keywords",
      [](const std::string& text, const std::string& language, int max_keywords,
         const std::vector<std::string>& forced) {
        KeywordRequest req;
        req.text = text;
        req.language = language;
        req.max_keywords = max_keywords;
        req.forced_keywords = forced;
        std::vector<py::tuple> out;
        for (const KeywordHit& h : ExtractKeywords(req)) {
          out.push_back(
              py::make_tuple(h.surface, h.start, h.end, h.score, h.forced));
        }
        return out;
      },
      py::arg("text"), py::arg("language") = "en", py::arg("max_keywords") = 5,
      py::arg("forced") = std::vector<std::string>{});

  m.def("camouflage_text", &CamouflageText, py::arg("text"),
        py::arg("language") = "en", py::arg("seed") = 0,
        py::arg("technique") = "auto", py::arg("config_json") = "",
        py::arg("keywords") = std::vector<std::string>{});
  m.def("camouflage_word", &CamouflageWord, py::arg("word"),
        py::arg("technique") = "auto", py::arg("language") = "en",
        py::arg("seed") = 0, py::arg("config_json") = "");
  m.def("generate", &Generate, py::arg("source_lines"), py::arg("seed") = 0,
        py::arg("workers") = 1, py::arg("config_json") = "");
  m.def("default_config", [] { return PipelineConfig().ToJson().dump(); });

  m.def(
      "quality_filter",
      [](const std::vector<std::string>& lines) {
        const FilterResult r = QualityFilter(ParseDocs(lines));
        std::vector<std::string> kept;
        for (const auto& d : r.kept) kept.push_back(DocumentToJsonLine(d));
        std::vector<py::tuple> rejected;
        for (const auto& rej : r.rejected) {
          rejected.push_back(
              py::make_tuple(rej.index, RejectReasonName(rej.reason)));
        }
        return py::make_tuple(kept, rejected);
      },
      py::arg("documents"));

  m.def(
      "to_tags",
      [](const std::string& line, const std::string& scheme) {
        const TokenizedDocument t = ToTagged(
            DocumentFromJson(Json::parse(line)), SchemeOrThrow(scheme));
        std::vector<std::string> tokens;
        for (const auto& tok : t.tokens) tokens.push_back(tok.surface);
        return py::make_tuple(tokens, t.tags);
      },
      py::arg("document"), py::arg("scheme") = "biluo");

  m.def(
      "score",
      [](const std::vector<std::string>& gold,
         const std::vector<std::string>& pred) {
        return ReportToJson(Score(ParseDocs(gold), ParseDocs(pred))).dump();
      },
      py::arg("gold"), py::arg("pred"));
}
