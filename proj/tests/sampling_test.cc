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

#include "qgen/sampling.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "oracles/sampler_properties.h"
#include "qgen/decode.h"
#include "qgen/errors.h"
#include "qgen/hash.h"

namespace qgen::decode {
namespace {

TokenDistribution Probs(std::vector<TokenWeight> entries) {
  return {WeightKind::kProbabilities, std::move(entries)};
}

TEST(TemperatureTest, ClosedFormTwoTokens) {
  // logits 2.4 and 0 at t = 0.6 give e^4 / (e^4 + 1).
  const TokenDistribution logits{WeightKind::kLogits, {{"a", 2.4}, {"b", 0.0}}};
  const auto out = ApplyTemperature(logits, 0.6);
  const double expected = std::exp(4.0) / (std::exp(4.0) + 1.0);
  EXPECT_NEAR(out.Weight("a"), expected, 1e-12);
  EXPECT_NEAR(out.Weight("b"), 1.0 - expected, 1e-12);
}

TEST(TemperatureTest, ProbabilitiesArePoweredAndRenormalized) {
  // p^(1/t) renormalized: 0.8^2 / (0.8^2 + 0.2^2) at t = 0.5.
  const auto out = ApplyTemperature(Probs({{"a", 0.8}, {"b", 0.2}}), 0.5);
  EXPECT_NEAR(out.Weight("a"), 0.64 / 0.68, 1e-12);
  const auto same = ApplyTemperature(Probs({{"a", 0.8}, {"b", 0.2}}), 1.0);
  EXPECT_NEAR(same.Weight("a"), 0.8, 1e-12);
}

TEST(TemperatureTest, RejectsBadInput) {
  const TokenDistribution logits{WeightKind::kLogits, {{"a", 1.0}}};
  EXPECT_THROW(ApplyTemperature(logits, 0.0), ParameterError);
  EXPECT_THROW(ApplyTemperature(logits, -1.0), ParameterError);
  const TokenDistribution bad{WeightKind::kLogits, {{"a", INFINITY}}};
  EXPECT_THROW(ApplyTemperature(bad, 1.0), ParameterError);
  EXPECT_THROW(ApplyTemperature(Probs({{"a", 0.5}, {"a", 0.5}}), 1.0),
               ParameterError);
}

TEST(TemperatureTest, ArgmaxInvariantOnRandomLogits) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto logits = oracles::RandomLogits(rng, 2 + rng() % 30);
    const auto expected = oracles::Argmax(logits);
    for (double t : {0.1, 0.6, 1.0, 3.0})
      ASSERT_EQ(oracles::Argmax(ApplyTemperature(logits, t)), expected);
  }
}

TEST(TemperatureTest, LowTemperatureSharpens) {
  const TokenDistribution logits{WeightKind::kLogits, {{"a", 1.0}, {"b", 0.5}}};
  EXPECT_GT(ApplyTemperature(logits, 0.1).Weight("a"),
            ApplyTemperature(logits, 1.0).Weight("a"));
  EXPECT_GT(ApplyTemperature(logits, 0.01).Weight("a"), 1.0 - 1e-12);
}

TEST(NucleusTest, ClosedFormExample) {
  const auto out =
      NucleusFilter(Probs({{"a", 0.5}, {"b", 0.3}, {"c", 0.2}}), 0.8);
  ASSERT_EQ(out.entries.size(), 2u);
  EXPECT_EQ(out.entries[0].token, "a");
  EXPECT_NEAR(out.Weight("a"), 0.625, 1e-12);
  EXPECT_NEAR(out.Weight("b"), 0.375, 1e-12);
  EXPECT_EQ(out.Weight("c"), 0.0);
}

TEST(NucleusTest, TopPOneKeepsEverything) {
  const auto in = Probs({{"a", 0.5}, {"b", 0.3}, {"c", 0.2}});
  EXPECT_EQ(NucleusFilter(in, 1.0).entries.size(), 3u);
}

TEST(NucleusTest, TiesBreakByTokenText) {
  const auto out =
      NucleusFilter(Probs({{"z", 0.25}, {"y", 0.25}, {"x", 0.25}, {"w", 0.25}}),
                    0.5);
  ASSERT_EQ(out.entries.size(), 2u);
  EXPECT_EQ(out.entries[0].token, "w");
  EXPECT_EQ(out.entries[1].token, "x");
}

TEST(NucleusTest, DominantTokenAlone) {
  const auto out = NucleusFilter(Probs({{"a", 0.95}, {"b", 0.05}}), 0.9);
  ASSERT_EQ(out.entries.size(), 1u);
  EXPECT_DOUBLE_EQ(out.entries[0].weight, 1.0);
}

TEST(NucleusTest, RejectsBadParameters) {
  const auto in = Probs({{"a", 1.0}});
  EXPECT_THROW(NucleusFilter(in, 0.0), ParameterError);
  EXPECT_THROW(NucleusFilter(in, 1.5), ParameterError);
  EXPECT_THROW(NucleusFilter({WeightKind::kLogits, {{"a", 1.0}}}, 0.9),
               ParameterError);
  EXPECT_THROW(NucleusFilter(Probs({{"a", 0.7}}), 0.9), ParameterError);
}

TEST(NucleusPropertyTest, MinimalSetOnRandomDistributions) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> up(0.05, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto in = oracles::RandomProbabilities(rng, 1 + rng() % 25, i % 2);
    const double p = up(rng);
    std::string why;
    ASSERT_TRUE(oracles::NucleusIsMinimal(in, p, NucleusFilter(in, p), &why))
        << why << " at case " << i;
  }
}

TEST(SampleTest, NeverDrawsOutsideTheNucleus) {
  const auto in =
      Probs({{"a", 0.4}, {"b", 0.3}, {"c", 0.15}, {"d", 0.1}, {"e", 0.05}});
  const auto nucleus = NucleusFilter(in, 0.8);  // a, b, c
  Rng rng(99);
  for (int i = 0; i < 100000; ++i) {
    const auto& t = SampleToken(nucleus, rng);
    ASSERT_TRUE(t == "a" || t == "b" || t == "c") << t;
  }
}

TEST(SampleTest, FrequenciesMatchTruncatedProbabilities) {
  const auto in =
      Probs({{"a", 0.4}, {"b", 0.3}, {"c", 0.15}, {"d", 0.1}, {"e", 0.05}});
  const auto nucleus = NucleusFilter(in, 0.8);
  Rng rng(5);
  std::map<std::string, int> counts;
  constexpr int kDraws = 10000;
  for (int i = 0; i < kDraws; ++i) ++counts[SampleToken(nucleus, rng)];
  for (const auto& e : nucleus.entries)
    EXPECT_NEAR(counts[e.token] / double(kDraws), e.weight, 0.02) << e.token;
}

TEST(SampleTest, SkipsZeroMassAndRejectsEmpty) {
  Rng rng(1);
  const auto d = Probs({{"zero", 0.0}, {"one", 1.0}});
  for (int i = 0; i < 100; ++i) EXPECT_EQ(SampleToken(d, rng), "one");
  EXPECT_THROW(SampleToken(Probs({}), rng), ParameterError);
}

TEST(SampleTest, UniformUnitIsPinnedToTheEngine) {
  Rng a(42), b(42);
  const std::uint64_t raw = b();
  EXPECT_EQ(UniformUnit(a), static_cast<double>(raw >> 11) * 0x1.0p-53);
}

TEST(SessionSeedTest, XorsWithTheParagraphHash) {
  EXPECT_EQ(SessionSeed(0, "0:1"), Hash64("0:1"));
  EXPECT_EQ(SessionSeed(123, "0:1"), 123 ^ Hash64("0:1"));
  EXPECT_NE(SessionSeed(1, "0:1"), SessionSeed(1, "0:2"));
}

TEST(HashTest, Sha256KnownVector) {
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(Hash64("abc"), 0xba7816bf8f01cfeaULL);
}

}  // namespace
}  // namespace qgen::decode
