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

#include "camoforge/formats.h"

#include <istream>
#include <ostream>

#include "camoforge/errors.h"
#include "camoforge/utf8.h"

namespace camoforge {
namespace {

using OJson = nlohmann::ordered_json;

constexpr std::string_view kHeaderFormat = "camoforge-spans";
constexpr std::string_view kTextPrefix = "# text = ";
constexpr std::string_view kLanguagePrefix = "# language = ";
constexpr std::string_view kSourcePrefix = "# source = ";

bool IsWordScalar(char32_t c) { return !IsSpace(c) && !IsPunctuation(c); }

struct ParsedTag {
  char prefix = 'O';
  EntityLabel label = EntityLabel::kLeetspeak;
};

ParsedTag ParseTag(const std::string& tag, TagScheme scheme, size_t index) {
  if (tag == "O") return {};
  const std::string_view allowed = scheme == TagScheme::kBiluo ? "BILU" : "BI";
  if (tag.size() < 3 || tag[1] != '-' ||
      allowed.find(tag[0]) == std::string_view::npos) {
    throw TaggingError(
        ErrorCode::kScheme, static_cast<long>(index),
        "malformed tag '" + tag + "' at token " + std::to_string(index));
  }
  const auto label = ParseEntityLabel(std::string_view(tag).substr(2));
  if (!label) {
    throw TaggingError(
        ErrorCode::kScheme, static_cast<long>(index),
        "unknown label in tag '" + tag + "' at token " + std::to_string(index));
  }
  return {tag[0], *label};
}

std::string MakeTag(char prefix, EntityLabel label) {
  return std::string(1, prefix) + "-" + EntityLabelName(label);
}

[[noreturn]] void SchemeError(size_t index, const std::string& what) {
  throw TaggingError(ErrorCode::kScheme, static_cast<long>(index),
                     what + " at token " + std::to_string(index));
}

size_t GetOffset(const OJson& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw Error(ErrorCode::kParse, std::string("field '") + key +
                                       "' must be a non-negative integer");
  }
  return j.at(key).get<size_t>();
}

std::string GetString(const OJson& j, const char* key, bool required) {
  if (!j.contains(key) || j.at(key).is_null()) {
    if (required) {
      throw Error(ErrorCode::kParse,
                  std::string("missing field '") + key + "'");
    }
    return {};
  }
  if (!j.at(key).is_string()) {
    throw Error(ErrorCode::kParse,
                std::string("field '") + key + "' must be a string");
  }
  return j.at(key).get<std::string>();
}

EntityLabel GetLabel(const OJson& j) {
  const std::string name = GetString(j, "label", true);
  const auto label = ParseEntityLabel(name);
  if (!label) throw Error(ErrorCode::kParse, "unknown label '" + name + "'");
  return *label;
}

OJson ProvenanceToJson(const ProvenanceRecord& p) {
  OJson keywords = OJson::array();
  for (const auto& kw : p.keywords) {
    keywords.push_back({{"original", kw.original},
                        {"original_start", kw.original_start},
                        {"original_end", kw.original_end},
                        {"camouflaged", kw.camouflaged},
                        {"start", kw.start},
                        {"end", kw.end},
                        {"label", EntityLabelName(kw.label)},
                        {"params", kw.params}});
  }
  return {{"original_text", p.original_text},
          {"extracted_keywords", p.extracted_keywords},
          {"keywords", std::move(keywords)},
          {"seed", p.seed}};
}

ProvenanceRecord ProvenanceFromJson(const OJson& j) {
  if (!j.is_object())
    throw Error(ErrorCode::kParse, "provenance must be an object");
  ProvenanceRecord p;
  p.original_text = GetString(j, "original_text", true);
  if (j.contains("extracted_keywords")) {
    for (const auto& w : j.at("extracted_keywords")) {
      if (!w.is_string()) {
        throw Error(ErrorCode::kParse, "extracted_keywords must hold strings");
      }
      p.extracted_keywords.push_back(w.get<std::string>());
    }
  }
  if (j.contains("keywords")) {
    if (!j.at("keywords").is_array()) {
      throw Error(ErrorCode::kParse, "provenance keywords must be an array");
    }
    for (const auto& k : j.at("keywords")) {
      CamouflagedKeyword kw;
      kw.original = GetString(k, "original", true);
      kw.original_start = GetOffset(k, "original_start");
      kw.original_end = GetOffset(k, "original_end");
      kw.camouflaged = GetString(k, "camouflaged", true);
      kw.start = GetOffset(k, "start");
      kw.end = GetOffset(k, "end");
      kw.label = GetLabel(k);
      if (k.contains("params")) kw.params = k.at("params");
      p.keywords.push_back(std::move(kw));
    }
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) {
      throw Error(ErrorCode::kParse,
                  "provenance seed must be a non-negative integer");
    }
    p.seed = j.at("seed").get<uint64_t>();
  }
  return p;
}

template <typename T, typename ParseFn>
std::vector<T> ReadJsonLines(std::istream& in, std::vector<LineError>* errors,
                             ParseFn parse) {
  std::vector<T> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      const OJson j = OJson::parse(line);
      if (IsSpansHeaderRecord(j)) continue;
      out.push_back(parse(j));
    } catch (const std::exception& e) {
      if (errors == nullptr) {
        throw Error(ErrorCode::kParse,
                    "line " + std::to_string(line_no) + ": " + e.what());
      }
      errors->push_back({line_no, e.what()});
    }
  }
  return out;
}

}  // namespace

const char* TagSchemeName(TagScheme scheme) {
  return scheme == TagScheme::kBiluo ? "biluo" : "iob";
}

std::optional<TagScheme> ParseTagScheme(std::string_view name) {
  if (name == "biluo") return TagScheme::kBiluo;
  if (name == "iob") return TagScheme::kIob;
  return std::nullopt;
}

std::vector<TextToken> Tokenize(std::string_view text,
                                const std::vector<Span>& spans) {
  const std::u32string t = DecodeUtf8(text);
  const size_t n = t.size();
  size_t prev_end = 0;
  for (const Span& s : spans) {
    if (s.start >= s.end || s.end > n || s.start < prev_end) {
      throw TaggingError(ErrorCode::kAlignment, static_cast<long>(s.start),
                         "span [" + std::to_string(s.start) + "," +
                             std::to_string(s.end) +
                             ") is out of range or overlaps");
    }
    for (size_t edge : {s.start, s.end}) {
      if (edge > 0 && edge < n && IsWordScalar(t[edge - 1]) &&
          IsWordScalar(t[edge])) {
        throw TaggingError(ErrorCode::kAlignment, static_cast<long>(s.start),
                           "span [" + std::to_string(s.start) + "," +
                               std::to_string(s.end) + ") splits a token");
      }
    }
    prev_end = s.end;
  }

  std::vector<TextToken> tokens;
  auto emit = [&](size_t a, size_t b) {
    tokens.push_back(
        {EncodeUtf8(std::u32string_view(t).substr(a, b - a)), a, b});
  };
  size_t next_span = 0;
  size_t i = 0;
  while (i < n) {
    while (next_span < spans.size() && spans[next_span].end <= i) ++next_span;
    if (IsSpace(t[i])) {
      ++i;
      continue;
    }
    const bool inside = next_span < spans.size() && spans[next_span].start <= i;
    size_t j = i + 1;
    if (inside) {
      while (j < spans[next_span].end && !IsSpace(t[j])) ++j;
    } else if (IsWordScalar(t[i])) {
      const size_t limit =
          next_span < spans.size() ? spans[next_span].start : n;
      while (j < limit && IsWordScalar(t[j])) ++j;
    }
    emit(i, j);
    i = j;
  }
  return tokens;
}

TokenizedDocument ToTagged(const AnnotatedDocument& doc, TagScheme scheme) {
  TokenizedDocument out;
  out.text = doc.text;
  out.language = doc.language;
  out.source = doc.source;
  out.tokens = Tokenize(doc.text, doc.spans);
  out.tags.assign(out.tokens.size(), "O");
  size_t k = 0;
  for (const Span& s : doc.spans) {
    while (k < out.tokens.size() && out.tokens[k].end <= s.start) ++k;
    size_t first = k;
    while (k < out.tokens.size() && out.tokens[k].end <= s.end) ++k;
    const size_t count = k - first;
    if (count == 0) {
      throw TaggingError(ErrorCode::kAlignment, static_cast<long>(s.start),
                         "span [" + std::to_string(s.start) + "," +
                             std::to_string(s.end) + ") covers no token");
    }
    if (count == 1) {
      out.tags[first] = MakeTag('U', s.label);
    } else {
      out.tags[first] = MakeTag('B', s.label);
      for (size_t m = first + 1; m + 1 < k; ++m)
        out.tags[m] = MakeTag('I', s.label);
      out.tags[k - 1] = MakeTag('L', s.label);
    }
  }
  if (scheme == TagScheme::kIob) out.tags = BiluoToIob(out.tags);
  return out;
}

void ValidateTags(const std::vector<std::string>& tags, TagScheme scheme) {
  std::optional<EntityLabel> open;
  for (size_t i = 0; i < tags.size(); ++i) {
    const ParsedTag tag = ParseTag(tags[i], scheme, i);
    if (scheme == TagScheme::kIob) {
      if (tag.prefix == 'I' && open != tag.label) {
        SchemeError(i, "I-" + std::string(EntityLabelName(tag.label)) +
                           " does not continue an entity of the same label");
      }
      open = tag.prefix == 'O' ? std::nullopt : std::optional(tag.label);
      continue;
    }
    switch (tag.prefix) {
      case 'O':
      case 'U':
      case 'B':
        if (open) SchemeError(i, "entity opened earlier is not closed");
        if (tag.prefix == 'B') open = tag.label;
        break;
      case 'I':
      case 'L':
        if (open != tag.label) {
          SchemeError(i, std::string(1, tag.prefix) + "-" +
                             EntityLabelName(tag.label) +
                             " without a matching B tag");
        }
        if (tag.prefix == 'L') open.reset();
        break;
    }
  }
  if (open && scheme == TagScheme::kBiluo) {
    SchemeError(tags.size() - 1, "entity is not closed by an L tag");
  }
}

std::vector<std::string> BiluoToIob(const std::vector<std::string>& tags) {
  ValidateTags(tags, TagScheme::kBiluo);
  std::vector<std::string> out = tags;
  for (std::string& tag : out) {
    if (tag[0] == 'U') tag[0] = 'B';
    if (tag[0] == 'L') tag[0] = 'I';
  }
  return out;
}

std::vector<std::string> IobToBiluo(const std::vector<std::string>& tags) {
  ValidateTags(tags, TagScheme::kIob);
  std::vector<std::string> out = tags;
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] == "O") continue;
    const bool continues = i + 1 < tags.size() && tags[i + 1][0] == 'I';
    if (out[i][0] == 'B' && !continues) out[i][0] = 'U';
    if (out[i][0] == 'I' && !continues) out[i][0] = 'L';
  }
  return out;
}

AnnotatedDocument FromTagged(const TokenizedDocument& tok, TagScheme scheme) {
  if (tok.tags.size() != tok.tokens.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "tag count " + std::to_string(tok.tags.size()) +
                    " differs from token count " +
                    std::to_string(tok.tokens.size()));
  }
  const std::vector<std::string> tags =
      scheme == TagScheme::kBiluo ? tok.tags : IobToBiluo(tok.tags);
  ValidateTags(tags, TagScheme::kBiluo);
  AnnotatedDocument doc;
  doc.text = tok.text;
  doc.language = tok.language;
  doc.source = tok.source;
  size_t begin = 0;
  for (size_t i = 0; i < tags.size(); ++i) {
    const char p = tags[i][0];
    if (p == 'B' || p == 'U') begin = tok.tokens[i].start;
    if (p == 'L' || p == 'U') {
      doc.spans.push_back(
          {begin, tok.tokens[i].end, *ParseEntityLabel(tags[i].substr(2))});
    }
  }
  return doc;
}

OJson DocumentToJson(const AnnotatedDocument& doc) {
  OJson spans = OJson::array();
  for (const Span& s : doc.spans) {
    spans.push_back({{"start", s.start},
                     {"end", s.end},
                     {"label", EntityLabelName(s.label)}});
  }
  OJson j;
  j["text"] = doc.text;
  j["spans"] = std::move(spans);
  j["provenance"] =
      doc.provenance ? ProvenanceToJson(*doc.provenance) : OJson(nullptr);
  j["language"] = doc.language;
  j["source"] = doc.source;
  return j;
}

AnnotatedDocument DocumentFromJson(const OJson& j) {
  if (!j.is_object())
    throw Error(ErrorCode::kParse, "document must be a JSON object");
  AnnotatedDocument doc;
  doc.text = GetString(j, "text", true);
  if (j.contains("spans")) {
    if (!j.at("spans").is_array())
      throw Error(ErrorCode::kParse, "spans must be an array");
    for (const auto& s : j.at("spans")) {
      if (!s.is_object())
        throw Error(ErrorCode::kParse, "span must be an object");
      doc.spans.push_back(
          {GetOffset(s, "start"), GetOffset(s, "end"), GetLabel(s)});
    }
  }
  if (j.contains("provenance") && !j.at("provenance").is_null()) {
    doc.provenance = ProvenanceFromJson(j.at("provenance"));
  }
  doc.language = GetString(j, "language", false);
  doc.source = GetString(j, "source", false);
  return doc;
}

std::string DocumentToJsonLine(const AnnotatedDocument& doc) {
  return DocumentToJson(doc).dump(-1, ' ', false,
                                  OJson::error_handler_t::strict);
}

OJson SpansHeaderRecord() {
  return {{"format", kHeaderFormat},
          {"version", 1},
          {"offsets", "unicode_scalar"},
          {"spans", "half_open"}};
}

bool IsSpansHeaderRecord(const OJson& j) {
  return j.is_object() && j.contains("format") &&
         j.at("format") == kHeaderFormat;
}

void WriteSpansJsonl(const std::vector<AnnotatedDocument>& docs,
                     std::ostream& out) {
  out << SpansHeaderRecord().dump() << '\n';
  for (const auto& doc : docs) out << DocumentToJsonLine(doc) << '\n';
}

std::vector<AnnotatedDocument> ReadSpansJsonl(std::istream& in,
                                              std::vector<LineError>* errors) {
  return ReadJsonLines<AnnotatedDocument>(in, errors, DocumentFromJson);
}

SourceDocument SourceFromJson(const OJson& j) {
  if (!j.is_object())
    throw Error(ErrorCode::kParse, "input line must be a JSON object");
  SourceDocument doc;
  doc.text = GetString(j, "text", true);
  const std::string lang = GetString(j, "language", false);
  if (!lang.empty()) doc.language = lang;
  doc.source = GetString(j, "source", false);
  return doc;
}

std::vector<SourceDocument> ReadSourceJsonl(std::istream& in,
                                            std::vector<LineError>* errors) {
  return ReadJsonLines<SourceDocument>(in, errors, SourceFromJson);
}

void WriteConll(const std::vector<TokenizedDocument>& docs, std::ostream& out,
                bool metadata) {
  for (const auto& doc : docs) {
    if (doc.tags.size() != doc.tokens.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tags and tokens are not aligned");
    }
    if (metadata) {
      out << kTextPrefix << OJson(doc.text).dump() << '\n';
      if (!doc.language.empty()) out << kLanguagePrefix << doc.language << '\n';
      if (!doc.source.empty()) out << kSourcePrefix << doc.source << '\n';
    }
    for (size_t i = 0; i < doc.tokens.size(); ++i) {
      out << doc.tokens[i].surface << '\t' << doc.tags[i] << '\n';
    }
    out << '\n';
  }
}

std::vector<TokenizedDocument> ReadConll(std::istream& in) {
  std::vector<TokenizedDocument> docs;
  TokenizedDocument cur;
  std::optional<std::string> text;
  bool open = false;
  size_t line_no = 0;

  auto finish = [&]() {
    if (!open) return;
    if (text) {
      const std::u32string t = DecodeUtf8(*text);
      size_t cursor = 0;
      for (TextToken& tok : cur.tokens) {
        const std::u32string s = DecodeUtf8(tok.surface);
        const size_t at = t.find(s, cursor);
        if (at == std::u32string::npos) {
          throw Error(ErrorCode::kParse,
                      "token '" + tok.surface +
                          "' not found in document text ending at line " +
                          std::to_string(line_no));
        }
        tok.start = at;
        tok.end = at + s.size();
        cursor = tok.end;
      }
      cur.text = *text;
    } else {
      std::string joined;
      size_t offset = 0;
      for (TextToken& tok : cur.tokens) {
        if (!joined.empty()) {
          joined += ' ';
          ++offset;
        }
        tok.start = offset;
        offset += ScalarLength(tok.surface);
        tok.end = offset;
        joined += tok.surface;
      }
      cur.text = std::move(joined);
    }
    docs.push_back(std::move(cur));
    cur = TokenizedDocument();
    text.reset();
    open = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish();
      continue;
    }
    const std::string_view view(line);
    if (view.starts_with(kTextPrefix)) {
      if (!cur.tokens.empty()) finish();
      try {
        const OJson j = OJson::parse(view.substr(kTextPrefix.size()));
        text = j.get<std::string>();
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParse,
                    "line " + std::to_string(line_no) + ": bad '# text' value");
      }
      open = true;
      continue;
    }
    if (view.starts_with(kLanguagePrefix)) {
      cur.language = std::string(view.substr(kLanguagePrefix.size()));
      open = true;
      continue;
    }
    if (view.starts_with(kSourcePrefix)) {
      cur.source = std::string(view.substr(kSourcePrefix.size()));
      open = true;
      continue;
    }
    const size_t tab = line.rfind('\t');
    if (tab == std::string::npos || tab == 0) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": expected 'surface<TAB>tag'");
    }
    cur.tokens.push_back({line.substr(0, tab), 0, 0});
    cur.tags.push_back(line.substr(tab + 1));
    open = true;
  }
  finish();
  return docs;
}

}  // namespace camoforge
