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

#include "camoforge/syllabify.h"

#include <fstream>
#include <string>
#include <vector>

#include "camoforge/errors.h"
#include "camoforge/utf8.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace camoforge {
namespace {

using Parts = std::vector<std::string>;

TEST(SyllabifyTest, SpanishExamples) {
  const Syllabifier es = Syllabifier::ForLanguage("es");
  EXPECT_TRUE(es.uses_patterns());
  EXPECT_EQ(es.Split(std::string_view("Covid")), (Parts{"Co", "vid"}));
  EXPECT_EQ(es.Split(std::string_view("Vacuna")), (Parts{"Va", "cu", "na"}));
  EXPECT_EQ(es.Split(std::string_view("Plandemia")),
            (Parts{"Plan", "de", "mia"}));
}

TEST(SyllabifyTest, EnglishExamples) {
  const Syllabifier en = Syllabifier::ForLanguage("en");
  EXPECT_EQ(en.Split(std::string_view("Genocide")),
            (Parts{"Gen", "o", "cide"}));
  EXPECT_EQ(en.Split(std::string_view("Inmigrant")), (Parts{"In", "migrant"}));
  EXPECT_EQ(en.Split(std::string_view("x")), (Parts{"x"}));
}

TEST(SyllabifyTest, RegionalCodesMapToBundledPatterns) {
  EXPECT_EQ(Syllabifier::ForLanguage("es_ES").Split(std::string_view("Vacuna")),
            (Parts{"Va", "cu", "na"}));
  EXPECT_EQ(Syllabifier::ForLanguage("en-GB").language(), "en");
}

TEST(SyllabifyTest, UnknownLanguageUsesHeuristic) {
  const Syllabifier xx = Syllabifier::ForLanguage("xx");
  EXPECT_FALSE(xx.uses_patterns());
  EXPECT_EQ(xx.Split(std::string_view("Vacuna")), (Parts{"Va", "cu", "na"}));
  EXPECT_EQ(xx.Split(std::string_view("cat")), (Parts{"cat"}));
}

TEST(SyllabifyTest, NonAlphabeticWordIsOnePiece) {
  const Syllabifier en = Syllabifier::ForLanguage("en");
  EXPECT_EQ(en.Split(std::string_view("12345")), (Parts{"12345"}));
  EXPECT_EQ(en.Split(std::string_view("@#!")), (Parts{"@#!"}));
}

TEST(SyllabifyTest, ApostropheAndHyphenEndASyllable) {
  const Syllabifier fr = Syllabifier::ForLanguage("fr");
  const auto parts = fr.Split(std::string_view("l'amour"));
  ASSERT_GE(parts.size(), 2u);
  EXPECT_EQ(parts[0], "l'");
  const auto hyphenated =
      Syllabifier::ForLanguage("en").Split(std::string_view("e-mail"));
  EXPECT_EQ(hyphenated.front(), "e-");
}

TEST(SyllabifyTest, LosslessOverFrequencyLists) {
  for (const std::string lang : {"en", "es", "fr", "it", "de"}) {
    const Syllabifier syl = Syllabifier::ForLanguage(lang);
    std::ifstream in(std::string(CAMOFORGE_TEST_DATA_DIR) +
                     "/../../data/frequency/" + lang + ".tsv");
    ASSERT_TRUE(in) << lang;
    std::string line;
    int checked = 0;
    while (std::getline(in, line) && checked < 3000) {
      if (line.empty() || line[0] == '#') continue;
      const std::string word = line.substr(0, line.find('\t'));
      const auto parts = syl.Split(std::string_view(word));
      std::string joined;
      for (const auto& p : parts) {
        ASSERT_FALSE(p.empty()) << word;
        joined += p;
      }
      ASSERT_EQ(joined, word);
      // Boundaries agree with the split.
      const auto bounds = syl.Boundaries(DecodeUtf8(word));
      ASSERT_EQ(bounds.size() + 1, parts.size()) << word;
      ++checked;
    }
  }
}

TEST(SyllabifyTest, TableTwoInversionsAreReachable) {
  struct Case {
    const char* lang;
    std::u32string word;
    std::u32string inverted;
  };
  const Case cases[] = {{"es", U"Vacuna", U"nacuVa"},
                        {"es", U"Covid", U"vidCo"},
                        {"es", U"Plandemia", U"dePlanmia"},
                        {"en", U"Inmigrant", U"migrantIn"},
                        {"en", U"Genocide", U"oGencide"}};
  for (const Case& c : cases) {
    const auto swaps = oracle::EnumerateSwaps(
        Syllabifier::ForLanguage(c.lang).Split(c.word), 4);
    EXPECT_TRUE(swaps.contains(c.inverted)) << EncodeUtf8(c.word);
  }
}

TEST(HyphenationPatternsTest, OddValuesBreakEvenValuesInhibit) {
  const auto patterns = HyphenationPatterns::Parse("UTF-8\n1b\n");
  EXPECT_EQ(patterns.BreakPoints(U"abab", 1, 1), (std::vector<size_t>{1, 3}));
  const auto inhibited = HyphenationPatterns::Parse("UTF-8\n1b\na2b\n");
  EXPECT_TRUE(inhibited.BreakPoints(U"abab", 1, 1).empty());
  // The left and right minimums trim breaks near the word edges.
  EXPECT_EQ(patterns.BreakPoints(U"abab", 2, 2), (std::vector<size_t>{}));
  EXPECT_EQ(patterns.BreakPoints(U"abab", 1, 2), (std::vector<size_t>{1}));
}

TEST(HyphenationPatternsTest, WordEdgeMarkers) {
  const auto patterns = HyphenationPatterns::Parse("UTF-8\n.ab1\n");
  EXPECT_EQ(patterns.BreakPoints(U"abab", 1, 1), (std::vector<size_t>{2}));
  EXPECT_EQ(patterns.BreakPoints(U"cabab", 1, 1), (std::vector<size_t>{}));
}

TEST(HyphenationPatternsTest, SkipsCommentsAndDirectives) {
  const auto patterns = HyphenationPatterns::Parse(
      "UTF-8\n% comment\nLEFTHYPHENMIN 2\nNEXTLEVEL\n1b\nc/d=e,1,1\n");
  EXPECT_EQ(patterns.size(), 1u);
}

TEST(HyphenationPatternsTest, RequiresUtf8Declaration) {
  EXPECT_THROW(HyphenationPatterns::Parse("ISO8859-1\n1b\n"), Error);
}

}  // namespace
}  // namespace camoforge
