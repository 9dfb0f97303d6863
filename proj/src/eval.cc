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

#include "camoforge/eval.h"

#include <algorithm>
#include <cstdio>
#include <set>

#include "camoforge/errors.h"

namespace camoforge {
namespace {

using OJson = nlohmann::ordered_json;

double Ratio(size_t num, size_t den, bool absent) {
  if (den == 0) return absent ? 1.0 : 0.0;
  return static_cast<double>(num) / static_cast<double>(den);
}

double F1(double p, double r) {
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

size_t Overlap(const Span& a, const Span& b) {
  const size_t lo = std::max(a.start, b.start);
  const size_t hi = std::min(a.end, b.end);
  return hi > lo ? hi - lo : 0;
}

void CheckAligned(const std::vector<AnnotatedDocument>& gold,
                  const std::vector<AnnotatedDocument>& pred) {
  const size_t n = std::min(gold.size(), pred.size());
  for (size_t i = 0; i < n; ++i) {
    if (gold[i].text != pred[i].text) {
      throw TaggingError(
          ErrorCode::kAlignment, static_cast<long>(i),
          "gold and prediction texts differ at document " + std::to_string(i));
    }
  }
  if (gold.size() != pred.size()) {
    throw TaggingError(ErrorCode::kAlignment, static_cast<long>(n),
                       "gold has " + std::to_string(gold.size()) +
                           " documents but prediction has " +
                           std::to_string(pred.size()));
  }
}

void Accumulate(const AnnotatedDocument& g, const AnnotatedDocument& p,
                MetricsReport& m) {
  const std::set<Span> gold_set(g.spans.begin(), g.spans.end());
  const std::set<Span> pred_set(p.spans.begin(), p.spans.end());
  for (const Span& s : gold_set) {
    auto& lm = m.per_label[static_cast<int>(s.label)];
    ++lm.support;
    if (pred_set.contains(s)) {
      ++lm.tp;
    } else {
      ++lm.fn;
    }
  }
  for (const Span& s : pred_set) {
    if (!gold_set.contains(s)) ++m.per_label[static_cast<int>(s.label)].fp;
  }

  std::vector<Span> preds(pred_set.begin(), pred_set.end());
  std::vector<bool> used(preds.size(), false);
  for (const Span& gs : gold_set) {
    size_t best = preds.size();
    size_t best_overlap = 0;
    for (size_t k = 0; k < preds.size(); ++k) {
      if (used[k]) continue;
      const size_t ov = Overlap(gs, preds[k]);
      if (ov > best_overlap) {
        best_overlap = ov;
        best = k;
      }
    }
    const int row = static_cast<int>(gs.label);
    if (best == preds.size()) {
      ++m.confusion[row][kOutside];
    } else {
      used[best] = true;
      ++m.confusion[row][static_cast<int>(preds[best].label)];
    }
  }
  for (size_t k = 0; k < preds.size(); ++k) {
    if (!used[k]) ++m.confusion[kOutside][static_cast<int>(preds[k].label)];
  }
}

void Finalize(MetricsReport& m) {
  size_t tp = 0, fp = 0, fn = 0;
  double macro_sum = 0.0;
  double weighted_sum = 0.0;
  size_t involved = 0;
  size_t support = 0;
  for (LabelMetrics& lm : m.per_label) {
    const bool absent = lm.Absent();
    lm.precision = Ratio(lm.tp, lm.tp + lm.fp, absent);
    lm.recall = Ratio(lm.tp, lm.tp + lm.fn, absent);
    lm.f1 = absent ? 1.0 : F1(lm.precision, lm.recall);
    tp += lm.tp;
    fp += lm.fp;
    fn += lm.fn;
    if (absent) continue;
    ++involved;
    macro_sum += lm.f1;
    weighted_sum += lm.f1 * static_cast<double>(lm.support);
    support += lm.support;
  }
  const bool empty = tp + fp + fn == 0;
  m.precision_micro = Ratio(tp, tp + fp, empty);
  m.recall_micro = Ratio(tp, tp + fn, empty);
  m.f1_micro = empty ? 1.0 : F1(m.precision_micro, m.recall_micro);
  m.f1_macro = involved == 0 ? 1.0 : macro_sum / static_cast<double>(involved);
  if (empty) {
    m.f1_weighted = 1.0;
  } else {
    m.f1_weighted =
        support == 0 ? 0.0 : weighted_sum / static_cast<double>(support);
  }
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string PadLeft(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string PadRight(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void RenderTables(const MetricsReport& m, std::string& out) {
  constexpr size_t kName = 14;
  constexpr size_t kCol = 11;
  out += PadRight("label", kName) + PadLeft("precision", kCol) +
         PadLeft("recall", kCol) + PadLeft("f1", kCol) +
         PadLeft("support", kCol) + "\n";
  for (int l = 0; l < kNumEntityLabels; ++l) {
    const LabelMetrics& lm = m.per_label[l];
    out += PadRight(EntityLabelName(static_cast<EntityLabel>(l)), kName);
    if (lm.Absent()) {
      out += PadLeft("-", kCol) + PadLeft("-", kCol) + PadLeft("-", kCol);
    } else {
      out += PadLeft(Fixed(lm.precision), kCol) +
             PadLeft(Fixed(lm.recall), kCol) + PadLeft(Fixed(lm.f1), kCol);
    }
    out += PadLeft(std::to_string(lm.support), kCol) + "\n";
  }
  out += "\n";
  out += PadRight("micro avg", kName) +
         PadLeft(Fixed(m.precision_micro), kCol) +
         PadLeft(Fixed(m.recall_micro), kCol) +
         PadLeft(Fixed(m.f1_micro), kCol) + "\n";
  out += PadRight("macro avg", kName) + PadLeft("", 2 * kCol) +
         PadLeft(Fixed(m.f1_macro), kCol) + "\n";
  out += PadRight("weighted avg", kName) + PadLeft("", 2 * kCol) +
         PadLeft(Fixed(m.f1_weighted), kCol) + "\n";
  out += "\nconfusion matrix (rows: actual, columns: predicted)\n";
  out += PadRight("", kName);
  for (int c = 0; c < kConfusionSize; ++c)
    out += PadLeft(ConfusionLabelName(c), kCol);
  out += "\n";
  for (int r = 0; r < kConfusionSize; ++r) {
    out += PadRight(ConfusionLabelName(r), kName);
    for (int c = 0; c < kConfusionSize; ++c) {
      out += PadLeft(std::to_string(m.confusion[r][c]), kCol);
    }
    out += "\n";
  }
}

}  // namespace

const char* ConfusionLabelName(int index) {
  if (index >= 0 && index < kNumEntityLabels) {
    return EntityLabelName(static_cast<EntityLabel>(index));
  }
  return "O";
}

MetricsReport Score(const std::vector<AnnotatedDocument>& gold,
                    const std::vector<AnnotatedDocument>& pred) {
  CheckAligned(gold, pred);
  MetricsReport m;
  m.documents = gold.size();
  for (size_t i = 0; i < gold.size(); ++i) Accumulate(gold[i], pred[i], m);
  Finalize(m);
  return m;
}

std::map<std::string, MetricsReport> ScoreBySource(
    const std::vector<AnnotatedDocument>& gold,
    const std::vector<AnnotatedDocument>& pred) {
  CheckAligned(gold, pred);
  std::map<std::string, MetricsReport> out;
  for (size_t i = 0; i < gold.size(); ++i) {
    MetricsReport& m = out[gold[i].source];
    ++m.documents;
    Accumulate(gold[i], pred[i], m);
  }
  for (auto& [source, m] : out) Finalize(m);
  return out;
}

OJson ReportToJson(const MetricsReport& m) {
  OJson per_label = OJson::object();
  for (int l = 0; l < kNumEntityLabels; ++l) {
    const LabelMetrics& lm = m.per_label[l];
    per_label[EntityLabelName(static_cast<EntityLabel>(l))] = {
        {"precision", lm.precision},
        {"recall", lm.recall},
        {"f1", lm.f1},
        {"support", lm.support},
        {"tp", lm.tp},
        {"fp", lm.fp},
        {"fn", lm.fn}};
  }
  OJson labels = OJson::array();
  OJson matrix = OJson::array();
  for (int r = 0; r < kConfusionSize; ++r) {
    labels.push_back(ConfusionLabelName(r));
    matrix.push_back(m.confusion[r]);
  }
  return {{"documents", m.documents},
          {"per_label", std::move(per_label)},
          {"precision_micro", m.precision_micro},
          {"recall_micro", m.recall_micro},
          {"f1_micro", m.f1_micro},
          {"f1_macro", m.f1_macro},
          {"f1_weighted", m.f1_weighted},
          {"confusion",
           {{"labels", std::move(labels)}, {"matrix", std::move(matrix)}}}};
}

std::string RenderReport(
    const MetricsReport& report,
    const std::map<std::string, MetricsReport>* breakdown) {
  std::string out = "documents: " + std::to_string(report.documents) + "\n\n";
  RenderTables(report, out);
  OJson j = ReportToJson(report);
  if (breakdown != nullptr) {
    OJson by_source = OJson::object();
    for (const auto& [source, m] : *breakdown) {
      const std::string name = source.empty() ? "(none)" : source;
      out += "\n== source: " + name +
             " (documents: " + std::to_string(m.documents) + ") ==\n";
      RenderTables(m, out);
      by_source[name] = ReportToJson(m);
    }
    j["by_source"] = std::move(by_source);
  }
  out += "\njson:\n" + j.dump(2) + "\n";
  return out;
}

}  // namespace camoforge
