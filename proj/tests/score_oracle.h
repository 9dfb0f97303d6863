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

// Reference entity scorer and random instance generator for the metrics
// tests.

#ifndef CAMOFORGE_TESTS_SCORE_ORACLE_H_
#define CAMOFORGE_TESTS_SCORE_ORACLE_H_

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "camoforge/document.h"
#include "camoforge/random.h"

namespace camoforge::oracle {

// Triple-set scorer written independently of the library: collect
// (doc, start, end, label) tuples and count intersections.
struct BruteForce {
  std::map<int, double> f1;
  std::map<int, size_t> support;
  double micro = 0.0;
  double macro = 0.0;
  double weighted = 0.0;
};

inline BruteForce ScoreByHand(const std::vector<AnnotatedDocument>& gold,
                              const std::vector<AnnotatedDocument>& pred) {
  using Triple = std::tuple<size_t, size_t, size_t, int>;
  std::set<Triple> g, p;
  for (size_t i = 0; i < gold.size(); ++i) {
    for (const Span& s : gold[i].spans)
      g.insert({i, s.start, s.end, static_cast<int>(s.label)});
    for (const Span& s : pred[i].spans)
      p.insert({i, s.start, s.end, static_cast<int>(s.label)});
  }
  BruteForce out;
  double tp_all = 0, g_all = 0, p_all = 0;
  double macro_sum = 0, weighted_sum = 0, support_sum = 0;
  int involved = 0;
  for (int l = 0; l < kNumEntityLabels; ++l) {
    double gl = 0, pl = 0, tp = 0;
    for (const auto& t : g) {
      if (std::get<3>(t) != l) continue;
      ++gl;
      tp += p.count(t);
    }
    for (const auto& t : p) pl += std::get<3>(t) == l;
    tp_all += tp;
    g_all += gl;
    p_all += pl;
    out.support[l] = static_cast<size_t>(gl);
    if (gl == 0 && pl == 0) {
      out.f1[l] = 1.0;
      continue;
    }
    const double f = gl + pl == 0 ? 0.0 : 2.0 * tp / (gl + pl);
    out.f1[l] = f;
    ++involved;
    macro_sum += f;
    weighted_sum += f * gl;
    support_sum += gl;
  }
  if (g_all + p_all == 0) {
    out.micro = out.macro = out.weighted = 1.0;
  } else {
    out.micro = 2.0 * tp_all / (g_all + p_all);
    out.macro = macro_sum / involved;
    out.weighted = support_sum == 0 ? 0.0 : weighted_sum / support_sum;
  }
  return out;
}

inline std::vector<Span> RandomSpans(RandomSource& rng) {
  std::vector<Span> spans;
  size_t pos = 0;
  while (true) {
    pos += static_cast<size_t>(rng.UniformInt(0, 4));
    const size_t len = static_cast<size_t>(rng.UniformInt(1, 4));
    if (pos + len > 30) break;
    if (rng.Uniform() < 0.6) {
      spans.push_back(
          {pos, pos + len, static_cast<EntityLabel>(rng.UniformInt(0, 3))});
    }
    pos += len;
  }
  return spans;
}

// Predictions that share most gold spans so that TP counts are nonzero.
inline std::vector<Span> Perturb(const std::vector<Span>& gold,
                                 RandomSource& rng) {
  std::vector<Span> out;
  for (Span s : gold) {
    const double u = rng.Uniform();
    if (u < 0.15) continue;
    if (u < 0.3)
      s.label = static_cast<EntityLabel>(rng.UniformInt(0, 3));
    else if (u < 0.4 && s.end < 30)
      ++s.end;
    out.push_back(s);
  }
  if (out.empty() && rng.Uniform() < 0.5) return RandomSpans(rng);
  return out;
}

}  // namespace camoforge::oracle

#endif  // CAMOFORGE_TESTS_SCORE_ORACLE_H_
