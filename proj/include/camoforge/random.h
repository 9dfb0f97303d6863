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

#ifndef CAMOFORGE_RANDOM_H_
#define CAMOFORGE_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>

namespace camoforge {

// Seeded random source with platform-independent draws.
//
// std::mt19937_64 has a fully specified output sequence, but the standard
// distributions do not, so every draw is mapped from raw engine output here.
// Not thread-safe; give each thread its own instance.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t seed() const { return seed_; }

  // Uniform in [0, 1) with 53 bits of precision.
  double Uniform();
  // Uniform integer in the closed range [lo, hi]. Requires lo <= hi.
  int64_t UniformInt(int64_t lo, int64_t hi);
  bool Bernoulli(double p) { return Uniform() < p; }
  // Index drawn proportionally to `weights`. Zero-weight entries are never
  // drawn. Requires a positive total weight.
  size_t WeightedChoice(std::span<const double> weights);

  // Seed for an independent child stream, e.g. one per document. Pure in
  // (master, index), so results do not depend on scheduling.
  static uint64_t DeriveSeed(uint64_t master, uint64_t index);

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace camoforge

#endif  // CAMOFORGE_RANDOM_H_
