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

#include "camoforge/dataset.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "camoforge/errors.h"
#include "camoforge/utf8.h"

namespace camoforge {
namespace {

constexpr int kNumSplits = 3;
constexpr const char* kSplitNames[kNumSplits] = {"train", "dev", "test"};
constexpr size_t kMinDocsPerStratum = 10;

size_t FloorCount(double x) {
  return static_cast<size_t>(std::floor(x + 1e-9));
}

// Largest-remainder apportionment of `n` items over `ratios`.
std::array<size_t, kNumSplits> Apportion(
    size_t n, const std::array<double, kNumSplits>& ratios) {
  std::array<size_t, kNumSplits> counts{};
  std::array<double, kNumSplits> frac{};
  size_t assigned = 0;
  for (int k = 0; k < kNumSplits; ++k) {
    const double ideal = ratios[k] * static_cast<double>(n);
    counts[k] = std::min(FloorCount(ideal), n);
    frac[k] = ideal - static_cast<double>(counts[k]);
    assigned += counts[k];
  }
  while (assigned < n) {
    int best = 0;
    for (int k = 1; k < kNumSplits; ++k) {
      if (frac[k] > frac[best] + 1e-12) best = k;
    }
    ++counts[best];
    frac[best] = -1.0;
    ++assigned;
  }
  return counts;
}

unsigned LabelMask(const AnnotatedDocument& doc) {
  unsigned mask = 0;
  for (const Span& s : doc.spans) mask |= 1u << static_cast<unsigned>(s.label);
  return mask;
}

struct Stratum {
  std::vector<size_t> members;
  unsigned labels = 0;
  std::array<size_t, kNumSplits> counts{};
  std::array<double, kNumSplits> ideal{};
};

}  // namespace

const char* RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kDuplicate:
      return "DUPLICATE";
    case RejectReason::kWhitespaceBoundary:
      return "WHITESPACE_BOUNDARY";
    case RejectReason::kSentenceCrossing:
      return "SENTENCE_CROSSING";
    case RejectReason::kInvalidSpan:
      return "INVALID_SPAN";
  }
  return "INVALID_SPAN";
}

std::optional<RejectReason> ParseRejectReason(std::string_view name) {
  for (RejectReason r :
       {RejectReason::kDuplicate, RejectReason::kWhitespaceBoundary,
        RejectReason::kSentenceCrossing, RejectReason::kInvalidSpan}) {
    if (name == RejectReasonName(r)) return r;
  }
  return std::nullopt;
}

std::vector<size_t> SentenceBoundaries(std::u32string_view text) {
  std::vector<size_t> out;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '.' && text[i] != '!' && text[i] != '?') continue;
    size_t j = i + 1;
    while (j < text.size() && IsSpace(text[j])) ++j;
    if (j > i + 1 && j < text.size() && IsUpper(text[j])) out.push_back(j);
  }
  return out;
}

std::vector<size_t> MappedSentenceBoundaries(const AnnotatedDocument& doc) {
  if (!doc.provenance || doc.provenance->original_text.empty()) {
    return SentenceBoundaries(DecodeUtf8(doc.text));
  }
  const auto& kws = doc.provenance->keywords;
  std::vector<size_t> out;
  for (size_t b :
       SentenceBoundaries(DecodeUtf8(doc.provenance->original_text))) {
    long shift = 0;
    for (const auto& kw : kws) {
      if (kw.original_end > b) break;
      shift += static_cast<long>(kw.end - kw.start) -
               static_cast<long>(kw.original_end - kw.original_start);
    }
    out.push_back(static_cast<size_t>(static_cast<long>(b) + shift));
  }
  return out;
}

FilterResult QualityFilter(std::vector<AnnotatedDocument> docs) {
  FilterResult result;
  std::unordered_set<std::string> seen_text;
  std::unordered_set<std::string> seen_original;
  for (size_t i = 0; i < docs.size(); ++i) {
    AnnotatedDocument& doc = docs[i];
    std::optional<RejectReason> reason;
    try {
      ValidateSpans(doc);
    } catch (const Error&) {
      reason = RejectReason::kInvalidSpan;
    }
    const std::u32string text = DecodeUtf8(doc.text);
    if (!reason) {
      for (const Span& s : doc.spans) {
        if (IsSpace(text[s.start]) || IsSpace(text[s.end - 1])) {
          reason = RejectReason::kWhitespaceBoundary;
          break;
        }
      }
    }
    if (!reason) {
      const auto bounds = MappedSentenceBoundaries(doc);
      for (const Span& s : doc.spans) {
        const bool crosses =
            std::any_of(bounds.begin(), bounds.end(),
                        [&](size_t b) { return s.start < b && b < s.end; });
        if (crosses) {
          reason = RejectReason::kSentenceCrossing;
          break;
        }
      }
    }
    const std::string* original =
        doc.provenance ? &doc.provenance->original_text : nullptr;
    if (!reason) {
      const bool dup = seen_text.contains(doc.text) ||
                       (original && seen_original.contains(*original));
      if (dup) reason = RejectReason::kDuplicate;
    }
    if (reason) {
      result.rejected.push_back({std::move(doc), *reason, i});
      continue;
    }
    seen_text.insert(doc.text);
    if (original) seen_original.insert(*original);
    for (const Span& s : doc.spans)
      ++result.label_counts[static_cast<int>(s.label)];
    if (doc.spans.empty()) ++result.documents_without_entities;
    result.kept.push_back(std::move(doc));
  }
  return result;
}

SplitSet StratifiedSplit(std::vector<AnnotatedDocument> docs,
                         const SplitRatios& ratios, RandomSource& rng) {
  const size_t n = docs.size();
  if (n < 10) {
    throw Error(ErrorCode::kInvalidArgument,
                "stratified split needs at least 10 documents");
  }
  const std::array<double, kNumSplits> r = {ratios.train, ratios.dev,
                                            ratios.test};
  for (double x : r) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "split ratios must be in [0, 1]");
    }
  }
  if (std::abs(r[0] + r[1] + r[2] - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument, "split ratios must sum to 1");
  }

  SplitSet out;
  auto build = [&](bool full_key) {
    std::map<std::string, Stratum> strata;
    for (size_t i = 0; i < n; ++i) {
      const unsigned mask = LabelMask(docs[i]);
      std::string key = std::to_string(mask);
      if (full_key)
        key = docs[i].language + '\x1f' + docs[i].source + '\x1f' + key;
      Stratum& s = strata[key];
      s.labels = mask;
      s.members.push_back(i);
    }
    return strata;
  };
  std::map<std::string, Stratum> strata = build(true);
  if (n < kMinDocsPerStratum * strata.size()) {
    out.warnings.push_back(
        "too few documents for (language, source, labels) strata (" +
        std::to_string(strata.size()) + " strata for " + std::to_string(n) +
        " documents); stratifying on labels only");
    strata = build(false);
  }

  // Floors first, then hand out each stratum's leftover seats so that the
  // running per-label and global rounding errors stay small.
  std::array<double, kNumSplits> global_err{};
  std::array<std::array<double, kNumSplits>, kNumEntityLabels + 1> label_err{};
  for (auto& [key, s] : strata) {
    const size_t m = s.members.size();
    // Fisher-Yates with the portable draws.
    for (size_t i = m; i > 1; --i) {
      const auto j =
          static_cast<size_t>(rng.UniformInt(0, static_cast<int64_t>(i) - 1));
      std::swap(s.members[i - 1], s.members[j]);
    }
    size_t assigned = 0;
    for (int k = 0; k < kNumSplits; ++k) {
      s.ideal[k] = r[k] * static_cast<double>(m);
      s.counts[k] = std::min(FloorCount(s.ideal[k]), m);
      assigned += s.counts[k];
    }
    const size_t leftover = m - assigned;

    std::vector<int> rows;
    for (int l = 0; l < kNumEntityLabels; ++l) {
      if (s.labels & (1u << l)) rows.push_back(l);
    }
    if (rows.empty()) rows.push_back(kNumEntityLabels);

    const auto cost = [&](const std::array<size_t, kNumSplits>& counts) {
      double c = 0.0;
      for (int k = 0; k < kNumSplits; ++k) {
        const double d = static_cast<double>(counts[k]) - s.ideal[k];
        c += (global_err[k] + d) * (global_err[k] + d);
        for (int l : rows) c += (label_err[l][k] + d) * (label_err[l][k] + d);
      }
      return c;
    };
    std::array<size_t, kNumSplits> best = s.counts;
    double best_cost = std::numeric_limits<double>::infinity();
    for (unsigned subset = 0; subset < (1u << kNumSplits); ++subset) {
      if (static_cast<size_t>(std::popcount(subset)) != leftover) continue;
      std::array<size_t, kNumSplits> cand = s.counts;
      for (int k = 0; k < kNumSplits; ++k) {
        if (subset & (1u << k)) ++cand[k];
      }
      const double c = cost(cand);
      if (c < best_cost - 1e-12) {
        best_cost = c;
        best = cand;
      }
    }
    s.counts = best;
    for (int k = 0; k < kNumSplits; ++k) {
      const double d = static_cast<double>(s.counts[k]) - s.ideal[k];
      global_err[k] += d;
      for (int l : rows) label_err[l][k] += d;
    }
  }

  // Hit the global targets exactly by moving leftover seats between splits
  // within strata that were rounded up on the surplus side.
  const auto target = Apportion(n, r);
  std::array<long, kNumSplits> surplus{};
  for (const auto& [key, s] : strata) {
    for (int k = 0; k < kNumSplits; ++k)
      surplus[k] += static_cast<long>(s.counts[k]);
  }
  for (int k = 0; k < kNumSplits; ++k)
    surplus[k] -= static_cast<long>(target[k]);
  for (int guard = 0; guard < static_cast<int>(n) * kNumSplits; ++guard) {
    int over = -1;
    int under = -1;
    for (int k = 0; k < kNumSplits; ++k) {
      if (surplus[k] > 0 && over < 0) over = k;
      if (surplus[k] < 0 && under < 0) under = k;
    }
    if (over < 0 || under < 0) break;
    Stratum* pick = nullptr;
    double pick_score = -std::numeric_limits<double>::infinity();
    for (auto& [key, s] : strata) {
      const double up_over =
          static_cast<double>(s.counts[over]) - s.ideal[over];
      const double up_under =
          static_cast<double>(s.counts[under]) - s.ideal[under];
      if (s.counts[over] == 0) continue;
      // Prefer strata that stay within floor/ceil after the move.
      const bool stays_bounded = up_over > 0.0 && up_under < 0.0;
      const double score = (stays_bounded ? 10.0 : 0.0) + up_over - up_under;
      if (score > pick_score) {
        pick_score = score;
        pick = &s;
      }
    }
    if (pick == nullptr) break;
    --pick->counts[over];
    ++pick->counts[under];
    --surplus[over];
    ++surplus[under];
  }

  // Within a stratum, documents are dealt out in order of entity count so
  // that entity-rich documents spread over the splits like the rest.
  std::array<std::vector<AnnotatedDocument>*, kNumSplits> dest = {
      &out.train, &out.dev, &out.test};
  for (auto& [key, s] : strata) {
    std::stable_sort(s.members.begin(), s.members.end(),
                     [&](size_t a, size_t b) {
                       return docs[a].spans.size() < docs[b].spans.size();
                     });
    const double m = static_cast<double>(s.members.size());
    std::array<size_t, kNumSplits> given{};
    for (size_t pos = 0; pos < s.members.size(); ++pos) {
      int pick = -1;
      double best_deficit = -std::numeric_limits<double>::infinity();
      for (int k = 0; k < kNumSplits; ++k) {
        if (given[k] == s.counts[k]) continue;
        const double quota =
            static_cast<double>(s.counts[k]) * static_cast<double>(pos + 1) / m;
        const double deficit = quota - static_cast<double>(given[k]);
        if (deficit > best_deficit + 1e-12) {
          best_deficit = deficit;
          pick = k;
        }
      }
      ++given[pick];
      dest[pick]->push_back(std::move(docs[s.members[pos]]));
    }
  }
  for (auto* split : dest) {
    for (size_t i = split->size(); i > 1; --i) {
      const auto j =
          static_cast<size_t>(rng.UniformInt(0, static_cast<int64_t>(i) - 1));
      std::swap((*split)[i - 1], (*split)[j]);
    }
  }
  return out;
}

std::vector<OverlapViolation> CheckSplitOverlap(const SplitSet& splits) {
  const std::array<const std::vector<AnnotatedDocument>*, kNumSplits> all = {
      &splits.train, &splits.dev, &splits.test};
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<std::string>> where;
  for (int k = 0; k < kNumSplits; ++k) {
    for (const auto& doc : *all[k]) {
      auto [it, inserted] = where.try_emplace(doc.text);
      if (inserted) order.push_back(doc.text);
      if (std::find(it->second.begin(), it->second.end(), kSplitNames[k]) ==
          it->second.end()) {
        it->second.push_back(kSplitNames[k]);
      }
    }
  }
  std::vector<OverlapViolation> out;
  for (const auto& text : order) {
    const auto& names = where[text];
    if (names.size() > 1) out.push_back({text, names});
  }
  return out;
}

}  // namespace camoforge
