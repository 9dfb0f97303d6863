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

// Corpus-level steps after generation: quality filtering and stratified
// train/dev/test splitting.

#ifndef CAMOFORGE_DATASET_H_
#define CAMOFORGE_DATASET_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "camoforge/document.h"
#include "camoforge/random.h"

namespace camoforge {

enum class RejectReason {
  kDuplicate,
  kWhitespaceBoundary,
  kSentenceCrossing,
  // Out-of-range, empty, unsorted or overlapping spans.
  kInvalidSpan,
};

// "DUPLICATE", "WHITESPACE_BOUNDARY", "SENTENCE_CROSSING", "INVALID_SPAN".
const char* RejectReasonName(RejectReason reason);
std::optional<RejectReason> ParseRejectReason(std::string_view name);

struct Rejection {
  AnnotatedDocument doc;
  RejectReason reason;
  size_t index;  // position in the filter input
};

struct FilterResult {
  std::vector<AnnotatedDocument> kept;
  std::vector<Rejection> rejected;
  // Entity counts per label over the kept documents, reported only; no
  // minimum is enforced.
  std::array<size_t, kNumEntityLabels> label_counts{};
  size_t documents_without_entities = 0;
};

// Sentence starts: offsets of the uppercase letter that follows '.', '!' or
// '?' plus whitespace.
std::vector<size_t> SentenceBoundaries(std::u32string_view text);

// Sentence boundaries of the pre-camouflage text, mapped onto the final text
// through the provenance record. Without provenance, boundaries are found on
// the final text directly.
std::vector<size_t> MappedSentenceBoundaries(const AnnotatedDocument& doc);

// Keeps documents whose text (and, with provenance, original text) has not
// been seen before, whose spans are valid, do not start or end with
// whitespace, and do not cross a sentence boundary. Order is preserved.
FilterResult QualityFilter(std::vector<AnnotatedDocument> docs);

struct SplitRatios {
  double train = 0.81;
  double dev = 0.09;
  double test = 0.10;
};

struct SplitSet {
  std::vector<AnnotatedDocument> train;
  std::vector<AnnotatedDocument> dev;
  std::vector<AnnotatedDocument> test;
  std::vector<std::string> warnings;
};

// Stratifies on (language, source, set of labels present). Split sizes come
// from largest-remainder rounding of the global counts; each stratum then
// receives either the floor or the ceiling of its proportional share. Falls
// back to label-only strata (with a warning) when the full key leaves fewer
// than ten documents per stratum on average. Requires at least 10 documents.
SplitSet StratifiedSplit(std::vector<AnnotatedDocument> docs,
                         const SplitRatios& ratios, RandomSource& rng);

struct OverlapViolation {
  std::string text;
  std::vector<std::string> splits;  // names of the splits holding the text
};

// Every text that appears in more than one split.
std::vector<OverlapViolation> CheckSplitOverlap(const SplitSet& splits);

}  // namespace camoforge

#endif  // CAMOFORGE_DATASET_H_
