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
#include <cmath>
#include <numeric>
#include <random>

#include "oracles/brute_force.h"
#include "qgen/errors.h"
#include "qgen/metrics.h"

namespace qgen::metrics {
namespace {

using V = std::vector<std::string>;

V Split(const std::string& s) {
  V out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto j = s.find(' ', i);
    out.push_back(s.substr(i, j == std::string::npos ? std::string::npos : j - i));
    if (j == std::string::npos) break;
    i = j + 1;
  }
  return out;
}

TEST(BleuTest, BrevityPenaltyClosedForm) {
  const std::vector<TokenList> pred = {{"a", "b", "c", "d"}};
  const std::vector<TokenList> ref = {{"a", "b", "c", "d", "e", "f"}};
  const auto bleu = BleuCorpus(pred, ref);
  EXPECT_NEAR(bleu[0], 100.0 * std::exp(1.0 - 6.0 / 4.0), 1e-9);
  EXPECT_NEAR(bleu[0], 60.653, 1e-3);
  EXPECT_NEAR(bleu[3], 60.653, 1e-3);  // every order is perfect
}

TEST(BleuTest, ClippingCapsRepeatedTokens) {
  const V pred = {"a", "a", "a"};
  const std::vector<TokenList> ref = {{"a"}};
  const auto stats = CollectNgramStats(pred, ref);
  EXPECT_EQ(stats.matched[0], 1);
  EXPECT_EQ(stats.total[0], 3);
  EXPECT_DOUBLE_EQ(ModifiedPrecision(stats, 1), 1.0 / 3.0);
}

TEST(BleuTest, IdentityScoresOneHundred) {
  const std::vector<TokenList> corpus = {
      Split("which nfl team represented the afc ?"),
      Split("where did super bowl 50 take place ?"),
      Split("what color was used ?")};
  for (double b : BleuCorpus(corpus, corpus)) EXPECT_DOUBLE_EQ(b, 100.0);
}

TEST(BleuTest, ZeroMatchesZeroTheOrderAndAbove) {
  const std::vector<TokenList> pred = {{"a", "b", "x", "c"}};
  const std::vector<TokenList> ref = {{"a", "b", "y", "c"}};
  const auto bleu = BleuCorpus(pred, ref);
  EXPECT_GT(bleu[0], 0.0);
  EXPECT_GT(bleu[1], 0.0);
  EXPECT_EQ(bleu[2], 0.0);
  EXPECT_EQ(bleu[3], 0.0);
}

TEST(BleuTest, RejectsEmptyOrMisalignedCorpora) {
  const std::vector<TokenList> one = {{"a"}};
  const std::vector<TokenList> two = {{"a"}, {"b"}};
  EXPECT_THROW(BleuCorpus({}, {}), ParameterError);
  EXPECT_THROW(BleuCorpus(one, two), ParameterError);
}

TEST(BleuTest, ClosestReferenceLengthPrefersShorterOnTies) {
  const V pred = {"a", "b", "c", "d"};
  const std::vector<TokenList> refs = {{"a", "b", "c", "d", "e"},
                                       {"a", "b", "c"}};
  EXPECT_EQ(CollectNgramStats(pred, refs).reference_length, 3);
}

// Corpus BLEU computed by NLTK's corpus_bleu (tests/oracles/bleu_nltk.py),
// frozen here.
struct NltkCase {
  const char* name;
  std::vector<std::string> preds;
  std::vector<std::vector<std::string>> refs;
  std::array<double, 4> expected;
};

TEST(BleuTest, MatchesFrozenNltkCorpusBleu) {
  const std::vector<NltkCase> cases = {
      {"two_pairs",
       {"the cat sat on the mat", "there is a cat here"},
       {{"the cat is on the mat"}, {"a cat is here"}},
       {81.818181818182, 60.302268915553, 37.312678152340, 0.0}},
      {"three_refs",
       {"it is a guide to action which ensures that the military always obeys "
        "the commands of the party"},
       {{"it is a guide to action that ensures that the military will forever "
         "heed party commands",
         "it is the guiding principle which guarantees the military forces "
         "always being under the command of the party",
         "it is the practical guide for the army always to heed the directions "
         "of the party"}},
       {94.444444444444, 74.535599249993, 62.407269893488, 50.456668400585}},
      {"questions",
       {"which team won super bowl 50 ?", "where was the game played ?",
        "what color was used ?"},
       {{"which nfl team represented the afc at super bowl 50 ?"},
        {"where did super bowl 50 take place ?"},
        {"what color was used to emphasize the 50th anniversary of the super "
         "bowl ?"}},
       {31.387648392178, 23.358951826219, 19.920082206809, 16.622150082139}},
  };
  for (const auto& c : cases) {
    NgramStats total;
    for (std::size_t i = 0; i < c.preds.size(); ++i) {
      std::vector<TokenList> refs;
      for (const auto& r : c.refs[i]) refs.push_back(Split(r));
      total += CollectNgramStats(Split(c.preds[i]), refs);
    }
    const auto bleu = BleuFromStats(total);
    for (int n = 0; n < 4; ++n)
      EXPECT_NEAR(bleu[n], c.expected[n], 1e-9) << c.name << " order " << n + 1;
  }
}

TEST(BleuPropertyTest, ModifiedPrecisionMatchesBruteForce) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 200; ++i) {
    const auto pred = oracles::RandomWords(rng, 12);
    std::vector<TokenList> refs;
    const int nrefs = 1 + static_cast<int>(rng() % 3);
    for (int r = 0; r < nrefs; ++r) refs.push_back(oracles::RandomWords(rng, 12));
    const auto stats = CollectNgramStats(pred, refs);
    for (int n = 1; n <= kMaxOrder; ++n) {
      const auto oracle = oracles::BruteClippedCount(pred, refs, n);
      ASSERT_EQ(stats.matched[n - 1], oracle.matched) << "case " << i;
      ASSERT_EQ(stats.total[n - 1], oracle.total) << "case " << i;
      const double expected =
          oracle.total == 0 ? 0.0 : double(oracle.matched) / double(oracle.total);
      ASSERT_NEAR(ModifiedPrecision(stats, n), expected, 1e-9);
    }
  }
}

TEST(BleuPropertyTest, ScoresStayInRangeAndIgnorePairOrder) {
  std::mt19937_64 rng(99);
  std::vector<TokenList> preds, refs;
  for (int i = 0; i < 50; ++i) {
    preds.push_back(oracles::RandomWords(rng, 12));
    refs.push_back(oracles::RandomWords(rng, 12));
  }
  const auto bleu = BleuCorpus(preds, refs);
  for (double b : bleu) {
    EXPECT_GE(b, 0.0);
    EXPECT_LE(b, 100.0);
  }
  std::vector<std::size_t> perm(preds.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<TokenList> p2, r2;
  for (auto k : perm) {
    p2.push_back(preds[k]);
    r2.push_back(refs[k]);
  }
  EXPECT_EQ(BleuCorpus(p2, r2), bleu);
}

TEST(SmoothedBleuTest, EpsilonReplacesZeroMatches) {
  const V pred = {"a", "b", "x", "c"};
  const std::vector<TokenList> ref = {{"a", "b", "y", "c"}};
  const auto stats = CollectNgramStats(pred, ref);
  const auto s = SmoothedBleuFromStats(stats);
  // p1 = 3/4, p2 = 1/3, p3 = eps/2, p4 = eps/1; equal lengths so BP = 1.
  const double eps = kSentenceBleuEpsilon;
  EXPECT_NEAR(s[0], 75.0, 1e-9);
  EXPECT_NEAR(s[1], 100.0 * std::sqrt(0.75 / 3.0), 1e-9);
  EXPECT_NEAR(s[2], 100.0 * std::cbrt(0.75 / 3.0 * eps / 2.0), 1e-9);
  EXPECT_NEAR(s[3], 100.0 * std::pow(0.75 / 3.0 * eps / 2.0 * eps, 0.25), 1e-9);
  EXPECT_GT(s[3], 0.0);
  EXPECT_LT(s[3], 1e-2);
}

TEST(SmoothedBleuTest, ShortPredictionsSkipMissingOrders) {
  const V pred = {"who", "won", "?"};
  const std::vector<TokenList> ref = {pred};
  const auto s = SmoothedBleuFromStats(CollectNgramStats(pred, ref));
  for (double b : s) EXPECT_NEAR(b, 100.0, 1e-9);
}

TEST(LcsTest, SmallCases) {
  EXPECT_EQ(LcsLength(V{"a", "b", "c"}, V{"a", "x", "c"}), 2u);
  const V x = {"p", "q", "r", "p"};
  EXPECT_EQ(LcsLength(x, x), x.size());
  EXPECT_EQ(LcsLength(V{}, x), 0u);
}

TEST(LcsPropertyTest, MatchesExhaustiveSubsequenceSearch) {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracles::RandomWords(rng, 12, 4);
    const auto b = oracles::RandomWords(rng, 12, 4);
    const auto lcs = LcsLength(a, b);
    ASSERT_EQ(lcs, oracles::BruteLcs(a, b)) << "case " << i;
    ASSERT_EQ(lcs, LcsLength(b, a));
    ASSERT_LE(lcs, std::min(a.size(), b.size()));
    auto a2 = a, b2 = b;
    a2.push_back("z");
    b2.push_back("z");
    ASSERT_EQ(LcsLength(a2, b2), lcs + 1);
  }
}

}  // namespace
}  // namespace qgen::metrics
