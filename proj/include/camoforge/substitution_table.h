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

#ifndef CAMOFORGE_SUBSTITUTION_TABLE_H_
#define CAMOFORGE_SUBSTITUTION_TABLE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace camoforge {

enum class ComplexityLevel { kBasic = 0, kIntermediate = 1, kAdvanced = 2 };
inline constexpr int kNumComplexityLevels = 3;

const char* ComplexityLevelName(ComplexityLevel level);
std::optional<ComplexityLevel> ParseComplexityLevel(std::string_view name);

struct Replacement {
  std::u32string text;
  ComplexityLevel level;
};

// Leetspeak substitutions keyed by lowercase source scalar.
//
// Invariants, enforced by Add() and Validate():
//  - replacements are 1..4 scalars and never equal their source
//  - every source with entries has at least one basic-level entry
//
// File format (UTF-8): `source<TAB>level<TAB>replacement` per line, '#'
// starts a comment line, blank lines are ignored.
class SubstitutionTable {
 public:
  SubstitutionTable() = default;

  // The built-in three-level table.
  static const SubstitutionTable& Default();
  static SubstitutionTable Parse(std::string_view contents);
  static SubstitutionTable LoadFile(const std::string& path);

  // Adds one entry; `source` is case-folded. Duplicate entries are ignored.
  void Add(char32_t source, std::u32string_view replacement,
           ComplexityLevel level);
  // Throws Error(kInvalidConfig) if a source lacks a basic entry.
  void Validate() const;

  // Case-insensitive lookup; nullptr if `c` has no substitutions.
  const std::vector<Replacement>* Find(char32_t c) const;
  bool Contains(char32_t c) const { return Find(c) != nullptr; }

  size_t size() const { return entries_.size(); }
  const std::map<char32_t, std::vector<Replacement>>& entries() const {
    return entries_;
  }

  // Inverse of Parse(), one record per line in source order.
  std::string Serialize() const;

 private:
  std::map<char32_t, std::vector<Replacement>> entries_;
};

}  // namespace camoforge

#endif  // CAMOFORGE_SUBSTITUTION_TABLE_H_
