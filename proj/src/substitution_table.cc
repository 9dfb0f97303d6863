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

#include "camoforge/substitution_table.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "camoforge/errors.h"
#include "camoforge/utf8.h"

namespace camoforge {
namespace {

constexpr size_t kMaxReplacementLength = 4;

// Basic: digit and single-symbol look-alikes. Intermediate: symbol clusters
// and non-ASCII look-alikes. Advanced: multi-scalar ASCII art.
constexpr std::string_view kDefaultTable =
    R"tsv(# source	level	replacement
a	basic	@
a	basic	4
a	intermediate	Δ
a	intermediate	/-\
a	advanced	/\
a	advanced	^
b	basic	8
b	intermediate	|3
b	intermediate	ß
b	advanced	13
b	advanced	|}
c	basic	(
c	intermediate	[
c	intermediate	¢
c	advanced	©
c	advanced	{
d	basic	|)
d	intermediate	[)
d	intermediate	|>
d	advanced	cl
e	basic	3
e	intermediate	€
e	intermediate	£
e	advanced	[-
f	basic	ƒ
f	intermediate	|=
f	advanced	ph
f	advanced	|#
g	basic	9
g	basic	6
g	intermediate	&
g	advanced	(_+
g	advanced	[,
h	basic	#
h	intermediate	|-|
h	advanced	}{
h	advanced	]-[
i	basic	1
i	basic	!
i	intermediate	¡
i	intermediate	|
i	advanced	][
j	basic	]
j	intermediate	_|
j	advanced	;
k	basic	|<
k	intermediate	|{
k	advanced	|(
l	basic	1
l	intermediate	|
l	intermediate	£
l	advanced	|_
m	basic	^^
m	intermediate	|\/|
m	advanced	[V]
m	advanced	/\/\
n	basic	^
n	intermediate	|\|
n	advanced	/\/
o	basic	0
o	intermediate	ø
o	intermediate	()
o	advanced	[]
o	advanced	<>
p	basic	|*
p	intermediate	|>
p	advanced	|°
p	advanced	¶
q	basic	9
q	intermediate	(,)
q	advanced	0_
r	basic	2
r	intermediate	|2
r	advanced	/2
r	advanced	®
s	basic	5
s	basic	$
s	intermediate	z
s	intermediate	§
s	advanced	~/
t	basic	7
t	basic	+
t	intermediate	†
t	advanced	-|-
u	basic	_
u	basic	ü
u	intermediate	|_|
u	advanced	µ
v	basic	\/
v	intermediate	√
v	advanced	|/
w	basic	vv
w	intermediate	\/\/
w	advanced	\^/
x	basic	><
x	intermediate	%
x	advanced	)(
y	basic	¥
y	intermediate	`/
y	advanced	'/
z	basic	2
z	intermediate	7_
z	advanced	~/_
á	basic	@
á	basic	4
à	basic	@
à	basic	4
â	basic	4
ä	basic	4
é	basic	3
è	basic	3
ê	basic	3
ë	basic	3
í	basic	1
í	basic	!
ì	basic	1
î	basic	1
ï	basic	1
ó	basic	0
ò	basic	0
ô	basic	0
ö	basic	0
ú	basic	_
ù	basic	_
û	basic	_
ü	basic	_
ñ	basic	~
)tsv";

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t pos = 0;
  while (true) {
    const size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

}  // namespace

const char* ComplexityLevelName(ComplexityLevel level) {
  switch (level) {
    case ComplexityLevel::kBasic:
      return "basic";
    case ComplexityLevel::kIntermediate:
      return "intermediate";
    case ComplexityLevel::kAdvanced:
      return "advanced";
  }
  return "basic";
}

std::optional<ComplexityLevel> ParseComplexityLevel(std::string_view name) {
  if (name == "basic") return ComplexityLevel::kBasic;
  if (name == "intermediate") return ComplexityLevel::kIntermediate;
  if (name == "advanced") return ComplexityLevel::kAdvanced;
  return std::nullopt;
}

const SubstitutionTable& SubstitutionTable::Default() {
  static const SubstitutionTable* table =
      new SubstitutionTable(Parse(kDefaultTable));
  return *table;
}

SubstitutionTable SubstitutionTable::Parse(std::string_view contents) {
  SubstitutionTable table;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= contents.size()) {
    size_t eol = contents.find('\n', pos);
    if (eol == std::string_view::npos) eol = contents.size();
    std::string_view line = contents.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = SplitTabs(line);
    if (fields.size() != 3) {
      throw Error(ErrorCode::kParse, "substitution table line " +
                                         std::to_string(line_no) +
                                         ": expected 3 tab-separated fields");
    }
    const std::u32string source = DecodeUtf8(fields[0]);
    if (source.size() != 1) {
      throw Error(ErrorCode::kParse, "substitution table line " +
                                         std::to_string(line_no) +
                                         ": source must be exactly one scalar");
    }
    const auto level = ParseComplexityLevel(fields[1]);
    if (!level) {
      throw Error(ErrorCode::kParse,
                  "substitution table line " + std::to_string(line_no) +
                      ": unknown level '" + std::string(fields[1]) + "'");
    }
    table.Add(source[0], DecodeUtf8(fields[2]), *level);
  }
  table.Validate();
  return table;
}

SubstitutionTable SubstitutionTable::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::kIo, "cannot open substitution table " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

void SubstitutionTable::Add(char32_t source, std::u32string_view replacement,
                            ComplexityLevel level) {
  const char32_t key = ToLower(source);
  if (replacement.empty()) {
    throw Error(
        ErrorCode::kInvalidConfig,
        "empty replacement for '" + EncodeUtf8(std::u32string(1, key)) + "'");
  }
  if (replacement.size() > kMaxReplacementLength) {
    throw Error(
        ErrorCode::kInvalidConfig,
        "replacement longer than 4 scalars: " + EncodeUtf8(replacement));
  }
  if (std::any_of(replacement.begin(), replacement.end(), IsSpace)) {
    throw Error(
        ErrorCode::kInvalidConfig,
        "replacement contains whitespace: \"" + EncodeUtf8(replacement) + "\"");
  }
  if (replacement.size() == 1 && ToLower(replacement[0]) == key) {
    throw Error(ErrorCode::kInvalidConfig,
                "replacement equals its source: " + EncodeUtf8(replacement));
  }
  auto& list = entries_[key];
  const bool exists = std::any_of(list.begin(), list.end(), [&](const auto& r) {
    return r.level == level && r.text == replacement;
  });
  if (!exists) list.push_back({std::u32string(replacement), level});
}

void SubstitutionTable::Validate() const {
  for (const auto& [source, list] : entries_) {
    const bool has_basic = std::any_of(
        list.begin(), list.end(),
        [](const auto& r) { return r.level == ComplexityLevel::kBasic; });
    if (!has_basic) {
      throw Error(ErrorCode::kInvalidConfig,
                  "source '" + EncodeUtf8(std::u32string(1, source)) +
                      "' has no basic-level replacement");
    }
  }
}

const std::vector<Replacement>* SubstitutionTable::Find(char32_t c) const {
  const auto it = entries_.find(ToLower(c));
  return it == entries_.end() ? nullptr : &it->second;
}

std::string SubstitutionTable::Serialize() const {
  std::string out = "# source\tlevel\treplacement\n";
  for (const auto& [source, list] : entries_) {
    for (const auto& r : list) {
      AppendUtf8(source, &out);
      out += '\t';
      out += ComplexityLevelName(r.level);
      out += '\t';
      out += EncodeUtf8(r.text);
      out += '\n';
    }
  }
  return out;
}

}  // namespace camoforge
