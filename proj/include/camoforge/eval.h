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

// Entity-level scoring of predicted camouflage spans.

#ifndef CAMOFORGE_EVAL_H_
#define CAMOFORGE_EVAL_H_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "camoforge/document.h"
#include "json.hpp"

namespace camoforge {

// Rows and columns of the confusion matrix: the four entity labels in
// EntityLabel order, then "O" for no entity.
inline constexpr int kConfusionSize = kNumEntityLabels + 1;
inline constexpr int kOutside = kNumEntityLabels;
const char* ConfusionLabelName(int index);

struct LabelMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  size_t support = 0;  // gold entities
  size_t tp = 0;
  size_t fp = 0;
  size_t fn = 0;

  // True when the label occurs in neither gold nor predictions. Such labels
  // report 1.0 everywhere and are left out of the macro and weighted means.
  bool Absent() const { return tp + fp + fn == 0; }
};

struct MetricsReport {
  size_t documents = 0;
  std::array<LabelMetrics, kNumEntityLabels> per_label{};
  double precision_micro = 0.0;
  double recall_micro = 0.0;
  double f1_micro = 0.0;
  double f1_macro = 0.0;
  double f1_weighted = 0.0;
  // confusion[actual][predicted]
  std::array<std::array<size_t, kConfusionSize>, kConfusionSize> confusion{};
};

// Exact (start, end, label) matching. gold[i] and pred[i] must carry the same
// text; otherwise TaggingError(kAlignment) with index i is thrown (index is
// the shorter length when the counts differ).
MetricsReport Score(const std::vector<AnnotatedDocument>& gold,
                    const std::vector<AnnotatedDocument>& pred);

// Reports keyed by the gold document's source.
std::map<std::string, MetricsReport> ScoreBySource(
    const std::vector<AnnotatedDocument>& gold,
    const std::vector<AnnotatedDocument>& pred);

nlohmann::ordered_json ReportToJson(const MetricsReport& report);

// Plain-text tables followed by the same numbers as a JSON block. With a
// breakdown, one extra section per source is appended.
std::string RenderReport(
    const MetricsReport& report,
    const std::map<std::string, MetricsReport>* breakdown = nullptr);

}  // namespace camoforge

#endif  // CAMOFORGE_EVAL_H_
