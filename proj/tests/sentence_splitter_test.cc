// Copyright 2026 The qgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qgen/analysis.h"

namespace qgen::analysis {
namespace {

using V = std::vector<std::string>;

constexpr const char* kProportionality1 =
    "Proportionality is recognised one of the general principles of European "
    "Union law by the European Court of Justice since the 1950s.";
constexpr const char* kProportionality2 =
    "According to the general principle of proportionality the lawfulness of "
    "an action depends on whether it was appropriate and necessary to achieve "
    "the objectives legitimately pursued.";
constexpr const char* kProportionality3 =
    "When there is a choice between several appropriate measures the least "
    "onerous must be adopted, and any disadvantage caused must not be "
    "disproportionate to the aims pursued.";
constexpr const char* kProportionality4 =
    "The principle of proportionality is also recognised in Article 5 of the "
    "EC Treaty, stating that \"any action by the Community shall not go beyond "
    "what is necessary to achieve the objectives of this Treaty.";

TEST(SentenceSplitterTest, ProportionalityRows) {
  const std::string two = std::string(kProportionality1) + " " + kProportionality2;
  EXPECT_EQ(SplitSentences(two), (V{kProportionality1, kProportionality2}));
  const std::string four = two + " " + kProportionality3 + " " + kProportionality4;
  EXPECT_EQ(SplitSentences(four), (V{kProportionality1, kProportionality2,
                                     kProportionality3, kProportionality4}));
}

TEST(SentenceSplitterTest, Basics) {
  EXPECT_EQ(SplitSentences("He won. She lost."), (V{"He won.", "She lost."}));
  EXPECT_EQ(SplitSentences("no terminal punctuation here"),
            (V{"no terminal punctuation here"}));
  EXPECT_EQ(SplitSentences(""), V{});
  EXPECT_EQ(SplitSentences("   "), V{});
  EXPECT_EQ(SplitSentences("Really? Yes! Fine."), (V{"Really?", "Yes!", "Fine."}));
}

TEST(SentenceSplitterTest, AbbreviationsInitialsAndAcronyms) {
  EXPECT_EQ(SplitSentences("Mr. Smith went to Washington. He stayed."),
            (V{"Mr. Smith went to Washington.", "He stayed."}));
  EXPECT_EQ(SplitSentences("It was built by J. R. Tolkien. It fell."),
            (V{"It was built by J. R. Tolkien.", "It fell."}));
  EXPECT_EQ(SplitSentences("The U.S. Army left. The war ended."),
            (V{"The U.S. Army left.", "The war ended."}));
  EXPECT_EQ(SplitSentences("See No. 5 for details. Then stop."),
            (V{"See No. 5 for details.", "Then stop."}));
  EXPECT_EQ(SplitSentences("He said no. 5 people left."),
            (V{"He said no. 5 people left."}));  // guarded before a digit
  EXPECT_EQ(SplitSentences("Fruit, e.g. apples, is good. Eat it."),
            (V{"Fruit, e.g. apples, is good.", "Eat it."}));
}

TEST(SentenceSplitterTest, NoSplitBeforeLowercaseOrInsideNumbers) {
  EXPECT_EQ(SplitSentences("It cost 3.5 million. Later it rose."),
            (V{"It cost 3.5 million.", "Later it rose."}));
  EXPECT_EQ(SplitSentences("The ratio was approx. equal to one."),
            (V{"The ratio was approx. equal to one."}));
  EXPECT_EQ(SplitSentences("Wait... what happened."),
            (V{"Wait... what happened."}));
}

TEST(SentenceSplitterTest, ClosingQuotesStayWithTheSentence) {
  EXPECT_EQ(SplitSentences("He said \"stop.\" Then he left."),
            (V{"He said \"stop.\"", "Then he left."}));
  EXPECT_EQ(SplitSentences("It was “done.” Next came more."),
            (V{"It was “done.”", "Next came more."}));
  EXPECT_EQ(SplitSentences("(It ended.) Then more."),
            (V{"(It ended.)", "Then more."}));
}

TEST(SentenceSplitterTest, NonAsciiOpenersStartSentences) {
  EXPECT_EQ(SplitSentences("It ended. Étienne left."),
            (V{"It ended.", "Étienne left."}));
  EXPECT_EQ(SplitSentences("It ended. 1950 was next."),
            (V{"It ended.", "1950 was next."}));
}

std::string NonSpace(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

TEST(SentenceSplitterPropertyTest, PreservesContentAndNeverEmpty) {
  std::mt19937_64 rng(21);
  const V pieces = {"The", "river", "Dr.", "U.S.", "flows", "north.", "It",
                    "ends!", "Why?", "\"Quote.\"", "no.", "5", "e.g.", "and",
                    "A.", "3.5", "(x.)", "—", "Zürich.", "  ", "\n"};
  for (int i = 0; i < 500; ++i) {
    std::string text;
    const int n = static_cast<int>(rng() % 40);
    for (int k = 0; k < n; ++k) {
      text += pieces[rng() % pieces.size()];
      text += ' ';
    }
    const auto sentences = SplitSentences(text);
    std::string joined;
    for (const auto& s : sentences) {
      ASSERT_FALSE(s.empty());
      ASSERT_EQ(s, std::string(s.data(), s.size()));
      ASSERT_FALSE(std::isspace(static_cast<unsigned char>(s.front())));
      ASSERT_FALSE(std::isspace(static_cast<unsigned char>(s.back())));
      joined += s + " ";
    }
    ASSERT_EQ(NonSpace(joined), NonSpace(text)) << text;
  }
}

}  // namespace
}  // namespace qgen::analysis
