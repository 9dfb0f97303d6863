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

#ifndef CAMOFORGE_DOCUMENT_H_
#define CAMOFORGE_DOCUMENT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace camoforge {

enum class EntityLabel {
  kLeetspeak = 0,
  kPunctCamo = 1,
  kInvCamo = 2,
  kMix = 3
};
inline constexpr int kNumEntityLabels = 4;
inline constexpr std::array<EntityLabel, kNumEntityLabels> kAllEntityLabels = {
    EntityLabel::kLeetspeak, EntityLabel::kPunctCamo, EntityLabel::kInvCamo,
    EntityLabel::kMix};

// "LEETSPEAK", "PUNCT_CAMO", "INV_CAMO", "MIX".
const char* EntityLabelName(EntityLabel label);
std::optional<EntityLabel> ParseEntityLabel(std::string_view name);

// Half-open [start, end) in Unicode scalar offsets.
struct Span {
  size_t start = 0;
  size_t end = 0;
  EntityLabel label = EntityLabel::kLeetspeak;

  auto operator<=>(const Span&) const = default;
};

// One camouflaged keyword occurrence.
struct CamouflagedKeyword {
  std::string original;
  size_t original_start = 0;
  size_t original_end = 0;
  std::string camouflaged;
  size_t start = 0;
  size_t end = 0;
  EntityLabel label = EntityLabel::kLeetspeak;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
};

struct ProvenanceRecord {
  std::string original_text;
  std::vector<std::string> extracted_keywords;
  // Only occurrences that were actually changed, in text order.
  std::vector<CamouflagedKeyword> keywords;
  uint64_t seed = 0;
};

struct AnnotatedDocument {
  std::string text;
  std::vector<Span> spans;
  std::optional<ProvenanceRecord> provenance;
  std::string language;
  std::string source;
};

// Throws Error(kInvariant) unless spans are in range, non-empty, sorted and
// non-overlapping.
void ValidateSpans(const AnnotatedDocument& doc);

// Undoes the camouflage using the provenance record. Requires provenance.
std::string ReconstructOriginal(const AnnotatedDocument& doc);

// Substring by scalar offsets.
std::string SliceScalars(std::string_view text, size_t start, size_t end);

}  // namespace camoforge

#endif  // CAMOFORGE_DOCUMENT_H_
