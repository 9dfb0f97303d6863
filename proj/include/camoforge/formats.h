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

// Serialization of annotated documents: span JSON(-lines), token tagging in
// the BILUO and IOB schemes, and a tab-separated column format.

#ifndef CAMOFORGE_FORMATS_H_
#define CAMOFORGE_FORMATS_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "camoforge/document.h"
#include "camoforge/pipeline.h"
#include "json.hpp"

namespace camoforge {

enum class TagScheme { kBiluo, kIob };

const char* TagSchemeName(TagScheme scheme);  // "biluo", "iob"
std::optional<TagScheme> ParseTagScheme(std::string_view name);

struct TextToken {
  std::string surface;
  size_t start = 0;  // scalar offsets, half-open
  size_t end = 0;

  bool operator==(const TextToken&) const = default;
};

struct TokenizedDocument {
  std::string text;
  std::vector<TextToken> tokens;
  std::vector<std::string> tags;
  std::string language;
  std::string source;
};

// Splits on whitespace everywhere and, outside the given spans, also emits
// every punctuation scalar as its own token. Span edges always fall on token
// edges; a span edge that would cut through a letter/digit run raises
// TaggingError(kAlignment) carrying the span start.
std::vector<TextToken> Tokenize(std::string_view text,
                                const std::vector<Span>& spans = {});

TokenizedDocument ToTagged(const AnnotatedDocument& doc, TagScheme scheme);
inline TokenizedDocument ToBiluo(const AnnotatedDocument& doc) {
  return ToTagged(doc, TagScheme::kBiluo);
}
inline TokenizedDocument ToIob(const AnnotatedDocument& doc) {
  return ToTagged(doc, TagScheme::kIob);
}

// Throws TaggingError(kScheme) at the first invalid tag. An entity left open
// at the end of a BILUO sequence is reported at the last index.
void ValidateTags(const std::vector<std::string>& tags, TagScheme scheme);

std::vector<std::string> BiluoToIob(const std::vector<std::string>& tags);
std::vector<std::string> IobToBiluo(const std::vector<std::string>& tags);

// Rebuilds spans from the token offsets. The result has no provenance.
AnnotatedDocument FromTagged(const TokenizedDocument& tok, TagScheme scheme);

// ---- Span JSON --------------------------------------------------------

// Canonical field order: text, spans, provenance (null when absent),
// language, source.
nlohmann::ordered_json DocumentToJson(const AnnotatedDocument& doc);
// Span validity is not checked here so the quality filter can report it.
// Throws Error(kParse) on schema violations.
AnnotatedDocument DocumentFromJson(const nlohmann::ordered_json& j);

std::string DocumentToJsonLine(const AnnotatedDocument& doc);

// First line of every span JSON-lines file.
nlohmann::ordered_json SpansHeaderRecord();
bool IsSpansHeaderRecord(const nlohmann::ordered_json& j);

struct LineError {
  size_t line = 0;  // 1-based
  std::string message;
};

void WriteSpansJsonl(const std::vector<AnnotatedDocument>& docs,
                     std::ostream& out);

// With `errors` set, malformed lines are recorded and skipped; otherwise the
// first one throws Error(kParse) naming its line. Blank lines and the header
// record are skipped.
std::vector<AnnotatedDocument> ReadSpansJsonl(
    std::istream& in, std::vector<LineError>* errors = nullptr);

// Generator input: one {"text", "language", "source"} object per line.
SourceDocument SourceFromJson(const nlohmann::ordered_json& j);
std::vector<SourceDocument> ReadSourceJsonl(
    std::istream& in, std::vector<LineError>* errors = nullptr);

// ---- Column format ----------------------------------------------------

// `surface<TAB>tag` per token and a blank line after each document. With
// `metadata`, each document is preceded by `# text = <JSON string>` and
// `# language = ...` / `# source = ...` lines so the reader can restore exact
// offsets.
void WriteConll(const std::vector<TokenizedDocument>& docs, std::ostream& out,
                bool metadata = true);

// Without a `# text` line the text is rebuilt by joining surfaces with single
// spaces.
std::vector<TokenizedDocument> ReadConll(std::istream& in);

}  // namespace camoforge

#endif  // CAMOFORGE_FORMATS_H_
