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

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "qgen/errors.h"
#include "qgen/metrics.h"

namespace qgen::metrics {
namespace {

using NgramCounts = std::unordered_map<std::string, std::int64_t>;

// Keys join tokens with U+001F, which TokenizeEval never produces.
NgramCounts CountNgrams(std::span<const std::string> tokens, int n) {
  NgramCounts counts;
  if (tokens.size() < static_cast<std::size_t>(n)) return counts;
  std::string key;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    key.clear();
    for (int k = 0; k < n; ++k) {
      if (k) key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

NgramStats& NgramStats::operator+=(const NgramStats& other) {
  for (int n = 0; n < kMaxOrder; ++n) {
    matched[n] += other.matched[n];
    total[n] += other.total[n];
  }
  prediction_length += other.prediction_length;
  reference_length += other.reference_length;
  return *this;
}

NgramStats CollectNgramStats(std::span<const std::string> prediction,
                             std::span<const TokenList> references) {
  NgramStats stats;
  stats.prediction_length = static_cast<std::int64_t>(prediction.size());

  std::int64_t best_len = -1;
  for (const auto& ref : references) {
    const auto len = static_cast<std::int64_t>(ref.size());
    const auto diff = std::llabs(len - stats.prediction_length);
    const auto best_diff = std::llabs(best_len - stats.prediction_length);
    if (best_len < 0 || diff < best_diff || (diff == best_diff && len < best_len))
      best_len = len;
  }
  stats.reference_length = std::max<std::int64_t>(best_len, 0);

  for (int n = 1; n <= kMaxOrder; ++n) {
    const NgramCounts pred_counts = CountNgrams(prediction, n);
    NgramCounts max_ref;
    for (const auto& ref : references) {
      for (const auto& [gram, count] : CountNgrams(ref, n)) {
        auto& slot = max_ref[gram];
        slot = std::max(slot, count);
      }
    }
    std::int64_t matched = 0, total = 0;
    for (const auto& [gram, count] : pred_counts) {
      total += count;
      auto it = max_ref.find(gram);
      if (it != max_ref.end()) matched += std::min(count, it->second);
    }
    stats.matched[n - 1] = matched;
    stats.total[n - 1] = total;
  }
  return stats;
}

double ModifiedPrecision(const NgramStats& stats, int n) {
  if (n < 1 || n > kMaxOrder) throw ParameterError("n-gram order out of range");
  if (stats.total[n - 1] == 0) return 0.0;
  return static_cast<double>(stats.matched[n - 1]) /
         static_cast<double>(stats.total[n - 1]);
}

namespace {

double BrevityPenalty(const NgramStats& stats) {
  const double c = static_cast<double>(stats.prediction_length);
  const double r = static_cast<double>(stats.reference_length);
  if (c >= r) return 1.0;
  return std::exp(1.0 - r / c);
}

}  // namespace

std::array<double, kMaxOrder> BleuFromStats(const NgramStats& stats) {
  std::array<double, kMaxOrder> scores{};
  if (stats.prediction_length == 0) return scores;
  const double bp = BrevityPenalty(stats);
  double log_sum = 0.0;
  for (int n = 0; n < kMaxOrder; ++n) {
    if (stats.matched[n] == 0 || stats.total[n] == 0) break;
    log_sum += std::log(static_cast<double>(stats.matched[n]) /
                        static_cast<double>(stats.total[n]));
    scores[n] = 100.0 * bp * std::exp(log_sum / (n + 1));
  }
  return scores;
}

std::array<double, kMaxOrder> SmoothedBleuFromStats(const NgramStats& stats,
                                                    double epsilon) {
  std::array<double, kMaxOrder> scores{};
  if (stats.prediction_length == 0) return scores;
  const double bp = BrevityPenalty(stats);
  double log_sum = 0.0;
  int orders = 0;
  for (int n = 0; n < kMaxOrder; ++n) {
    if (stats.total[n] > 0) {
      const double matched =
          stats.matched[n] > 0 ? static_cast<double>(stats.matched[n]) : epsilon;
      log_sum += std::log(matched / static_cast<double>(stats.total[n]));
      ++orders;
    }
    scores[n] = 100.0 * bp * std::exp(log_sum / orders);
  }
  return scores;
}

std::array<double, kMaxOrder> BleuCorpus(std::span<const TokenList> predictions,
                                         std::span<const TokenList> references) {
  if (predictions.empty()) throw ParameterError("empty corpus");
  if (predictions.size() != references.size())
    throw ParameterError("predictions and references differ in length");
  NgramStats total;
  for (std::size_t i = 0; i < predictions.size(); ++i)
    total += CollectNgramStats(predictions[i], references.subspan(i, 1));
  return BleuFromStats(total);
}

}  // namespace qgen::metrics
