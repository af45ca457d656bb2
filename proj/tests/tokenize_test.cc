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

#include "qgen/metrics.h"

namespace qgen::metrics {
namespace {

using V = std::vector<std::string>;

TEST(TokenizeTest, LowercasesAndSplitsPunctuation) {
  EXPECT_EQ(TokenizeEval("Which NFL team?"), (V{"which", "nfl", "team", "?"}));
  EXPECT_EQ(TokenizeEval(""), V{});
  EXPECT_EQ(TokenizeEval("Super Bowl 50."), (V{"super", "bowl", "50", "."}));
  EXPECT_EQ(TokenizeEval("  \t\n "), V{});
}

TEST(TokenizeTest, EveryPunctuationCharacterIsItsOwnToken) {
  EXPECT_EQ(TokenizeEval("Levi's"), (V{"levi", "'", "s"}));
  EXPECT_EQ(TokenizeEval("(AFC)"), (V{"(", "afc", ")"}));
  EXPECT_EQ(TokenizeEval("24–10"), (V{"24", "–", "10"}));
  EXPECT_EQ(TokenizeEval("\"golden\"..."),
            (V{"\"", "golden", "\"", ".", ".", "."}));
  EXPECT_EQ(TokenizeEval("“quoted”"), (V{"“", "quoted", "”"}));
}

TEST(TokenizeTest, LowercasesBeyondAscii) {
  EXPECT_EQ(TokenizeEval("BEYONCÉ"), (V{"beyoncé"}));
  EXPECT_EQ(TokenizeEval("ŁÓDŹ"), (V{"łódź"}));
  EXPECT_EQ(TokenizeEval("ΑΘΗΝΑ"), (V{"αθηνα"}));
  EXPECT_EQ(TokenizeEval("МОСКВА"), (V{"москва"}));
  EXPECT_EQ(TokenizeEval("Ÿ"), (V{"ÿ"}));
}

TEST(TokenizeTest, NonBreakingSpaceSeparates) {
  EXPECT_EQ(TokenizeEval("a\xc2\xa0" "b"), (V{"a", "b"}));
}

TEST(TokenizeTest, Deterministic) {
  const std::string s = "Who founded the Université de Montréal in 1878?";
  EXPECT_EQ(TokenizeEval(s), TokenizeEval(s));
}

}  // namespace
}  // namespace qgen::metrics
