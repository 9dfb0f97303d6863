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

#include "camoforge/random.h"

#include "camoforge/errors.h"

namespace camoforge {
namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

double RandomSource::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int64_t RandomSource::UniformInt(int64_t lo, int64_t hi) {
  if (lo > hi) {
    throw Error(ErrorCode::kInvalidArgument, "UniformInt: empty range");
  }
  const uint64_t range = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
  if (range == UINT64_MAX) return static_cast<int64_t>(engine_());
  const uint64_t span = range + 1;
  // Rejection sampling on the top of the 64-bit range to stay unbiased.
  const uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
  uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<int64_t>(draw % span);
}

size_t RandomSource::WeightedChoice(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw Error(ErrorCode::kInvalidArgument, "negative weight");
    total += w;
  }
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "weights sum to zero");
  }
  const double target = Uniform() * total;
  double acc = 0.0;
  size_t last_positive = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last_positive = i;
    if (target < acc) return i;
  }
  return last_positive;
}

uint64_t RandomSource::DeriveSeed(uint64_t master, uint64_t index) {
  return SplitMix64(SplitMix64(master) ^
                    SplitMix64(index + 0x632BE59BD9B4E019ULL));
}

}  // namespace camoforge
