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

#include "camoforge/document.h"

#include "camoforge/errors.h"
#include "camoforge/utf8.h"

namespace camoforge {

const char* EntityLabelName(EntityLabel label) {
  switch (label) {
    case EntityLabel::kLeetspeak:
      return "LEETSPEAK";
    case EntityLabel::kPunctCamo:
      return "PUNCT_CAMO";
    case EntityLabel::kInvCamo:
      return "INV_CAMO";
    case EntityLabel::kMix:
      return "MIX";
  }
  return "LEETSPEAK";
}

std::optional<EntityLabel> ParseEntityLabel(std::string_view name) {
  for (EntityLabel label : kAllEntityLabels) {
    if (name == EntityLabelName(label)) return label;
  }
  return std::nullopt;
}

void ValidateSpans(const AnnotatedDocument& doc) {
  const size_t length = ScalarLength(doc.text);
  size_t prev_end = 0;
  for (size_t i = 0; i < doc.spans.size(); ++i) {
    const Span& s = doc.spans[i];
    if (s.start >= s.end || s.end > length) {
      throw Error(ErrorCode::kInvariant,
                  "span " + std::to_string(i) + " [" + std::to_string(s.start) +
                      "," + std::to_string(s.end) + ") out of range");
    }
    if (i > 0 && s.start < prev_end) {
      throw Error(ErrorCode::kInvariant,
                  "span " + std::to_string(i) + " overlaps or is out of order");
    }
    prev_end = s.end;
  }
}

std::string ReconstructOriginal(const AnnotatedDocument& doc) {
  if (!doc.provenance) {
    throw Error(ErrorCode::kInvalidArgument, "document has no provenance");
  }
  std::u32string text = DecodeUtf8(doc.text);
  const auto& kws = doc.provenance->keywords;
  for (auto it = kws.rbegin(); it != kws.rend(); ++it) {
    if (it->end > text.size() || it->start > it->end) {
      throw Error(ErrorCode::kInvariant, "provenance offsets out of range");
    }
    text.replace(it->start, it->end - it->start, DecodeUtf8(it->original));
  }
  return EncodeUtf8(text);
}

std::string SliceScalars(std::string_view text, size_t start, size_t end) {
  const std::u32string decoded = DecodeUtf8(text);
  if (start > end || end > decoded.size()) {
    throw Error(ErrorCode::kInvalidArgument, "slice out of range");
  }
  return EncodeUtf8(std::u32string_view(decoded).substr(start, end - start));
}

}  // namespace camoforge
