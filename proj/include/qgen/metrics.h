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

#ifndef QGEN_METRICS_H_
#define QGEN_METRICS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgen::metrics {

// Output of TokenizeEval: non-empty, lowercased surface forms.
using TokenList = std::vector<std::string>;

inline constexpr int kMaxOrder = 4;

// Lowercases, splits on whitespace and makes every punctuation character a
// token of its own. Case folding covers ASCII, Latin-1, Latin Extended-A,
// Greek and Cyrillic capitals.
TokenList TokenizeEval(std::string_view text);

// Longest common subsequence length under token equality. O(|a|*|b|) time,
// O(min(|a|,|b|)) space.
std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b);

// Sufficient statistics for BLEU over one or more sentence pairs.
struct NgramStats {
  std::array<std::int64_t, kMaxOrder> matched{};  // clipped
  std::array<std::int64_t, kMaxOrder> total{};    // prediction n-grams
  std::int64_t prediction_length = 0;
  std::int64_t reference_length = 0;

  NgramStats& operator+=(const NgramStats& other);
};

// Clips each prediction n-gram count by its largest count in any reference.
// The reference length is the one closest to the prediction length, the
// shorter on ties.
NgramStats CollectNgramStats(std::span<const std::string> prediction,
                             std::span<const TokenList> references);

// matched[n-1] / total[n-1]; 0 when there are no prediction n-grams.
double ModifiedPrecision(const NgramStats& stats, int n);

// Cumulative BLEU_1..BLEU_4 on a 0-100 scale with brevity penalty
// min(1, exp(1 - r/c)). Unsmoothed: an order with no matches (or no
// prediction n-grams) scores 0, as do all higher orders.
std::array<double, kMaxOrder> BleuFromStats(const NgramStats& stats);

// Sentence-level BLEU for curves: zero match counts are replaced by epsilon,
// and orders the prediction is too short to have are left out of the mean.
inline constexpr double kSentenceBleuEpsilon = 1e-9;
std::array<double, kMaxOrder> SmoothedBleuFromStats(
    const NgramStats& stats, double epsilon = kSentenceBleuEpsilon);

// Corpus BLEU over aligned prediction/reference lists (one reference each).
// Throws ParameterError on an empty corpus or mismatched lengths.
std::array<double, kMaxOrder> BleuCorpus(std::span<const TokenList> predictions,
                                         std::span<const TokenList> references);

inline constexpr double kRougeBeta = 1.2;

// ROUGE-L F-measure, 0-100. 0 if either side is empty.
double RougeL(std::span<const std::string> prediction,
              std::span<const std::string> reference,
              double beta = kRougeBeta);

struct MeteorParams {
  double alpha = 0.9;
  double beta = 3.0;
  double gamma = 0.5;

  bool operator==(const MeteorParams&) const = default;
};

struct MeteorAlignment {
  // (prediction index, reference index), sorted by prediction index.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t exact_matches = 0;
  std::size_t stem_matches = 0;
  std::size_t chunks = 0;

  std::size_t matches() const { return pairs.size(); }
};

// Exact-match stage, then Porter-stem stage over what is left. Within a stage
// every token is matched if a partner remains; contiguous runs are taken
// longest first, which keeps the chunk count low.
MeteorAlignment AlignMeteor(std::span<const std::string> prediction,
                            std::span<const std::string> reference);

// METEOR (exact + stem), 0-100. 0 if there are no matches.
double Meteor(std::span<const std::string> prediction,
              std::span<const std::string> reference,
              const MeteorParams& params = {});

struct EvalPair {
  TokenList prediction;
  std::vector<TokenList> references;  // usually exactly one
};

struct ScoreReport {
  std::array<double, kMaxOrder> bleu{};
  double meteor = 0.0;
  double rouge_l = 0.0;
  std::size_t prediction_count = 0;
  std::size_t empty_pairs = 0;  // scored 0 by ROUGE-L/METEOR
};

// Corpus scores: BLEU from pooled n-gram statistics, METEOR and ROUGE-L as
// means of the per-pair maxima over references. Pairs are scored in parallel
// and reduced in input order. Throws ParameterError on an empty corpus or a
// pair without references.
ScoreReport ScoreCorpus(std::span<const EvalPair> pairs);

// Names the metric choices so reports can refuse to compare runs scored
// differently.
struct MetricVariant {
  std::string tokenizer = "lowercase-punct-split";
  int bleu_max_order = kMaxOrder;
  std::string bleu_smoothing = "none";
  bool multi_reference = false;
  double rouge_beta = kRougeBeta;
  std::string meteor_stages = "exact+porter_stem";
  MeteorParams meteor;

  bool operator==(const MetricVariant&) const = default;
};

}  // namespace qgen::metrics

#endif  // QGEN_METRICS_H_
