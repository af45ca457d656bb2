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

#ifndef QGEN_SAMPLING_H_
#define QGEN_SAMPLING_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qgen::decode {

enum class WeightKind { kLogits, kProbabilities };

struct TokenWeight {
  std::string token;
  double weight = 0.0;
};

// Next-token scores over a (possibly partial) vocabulary.
struct TokenDistribution {
  WeightKind kind = WeightKind::kProbabilities;
  std::vector<TokenWeight> entries;

  // Tokens unique; logits finite; probabilities non-negative and summing to
  // one within 1e-9. Throws ParameterError.
  void Validate() const;
  double Weight(std::string_view token) const;  // 0 when absent
};

inline constexpr double kProbabilityTolerance = 1e-9;

// Cumulative mass counts as reaching p when it is within this of p, so that
// e.g. 0.5 + 0.3 reaches 0.8 despite rounding.
inline constexpr double kNucleusSlack = 1e-12;

// softmax(logit / t). Throws ParameterError if t <= 0 or a logit is not
// finite. A probability-tagged input is treated as logits log(p), which maps
// p to p^(1/t) renormalized.
TokenDistribution ApplyTemperature(const TokenDistribution& dist,
                                   double temperature);

// Keeps the smallest prefix of the tokens ordered by (probability desc, token
// asc) whose mass reaches top_p, renormalized. Output is in that order.
TokenDistribution NucleusFilter(const TokenDistribution& probs, double top_p);

// The generator every session uses; seeded per session, one draw per token.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) built from the top 53 bits of one draw, so the
// value depends only on the engine and not on the standard library.
double UniformUnit(Rng& rng);

// Inverse-CDF draw over the entries in their given order. Throws
// ParameterError on an empty distribution.
const std::string& SampleToken(const TokenDistribution& probs, Rng& rng);

// seed XOR Hash64(paragraph_id): per-session streams that do not depend on
// scheduling.
std::uint64_t SessionSeed(std::uint64_t seed, std::string_view paragraph_id);

}  // namespace qgen::decode

#endif  // QGEN_SAMPLING_H_
