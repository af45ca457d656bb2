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
#include <vector>

#include "qgen/errors.h"
#include "qgen/metrics.h"

namespace qgen::metrics {

ScoreReport ScoreCorpus(std::span<const EvalPair> pairs) {
  if (pairs.empty()) throw ParameterError("empty corpus");
  for (const auto& p : pairs)
    if (p.references.empty()) throw ParameterError("pair without references");

  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
  std::vector<NgramStats> stats(pairs.size());
  std::vector<double> rouge(pairs.size()), meteor(pairs.size());
  std::vector<unsigned char> empty(pairs.size(), 0);

#pragma omp parallel for schedule(dynamic, 32)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const EvalPair& p = pairs[i];
    stats[i] = CollectNgramStats(p.prediction, p.references);
    double best_rouge = 0.0, best_meteor = 0.0;
    for (const auto& ref : p.references) {
      if (p.prediction.empty() || ref.empty()) empty[i] = 1;
      best_rouge = std::max(best_rouge, RougeL(p.prediction, ref));
      best_meteor = std::max(best_meteor, Meteor(p.prediction, ref));
    }
    rouge[i] = best_rouge;
    meteor[i] = best_meteor;
  }

  ScoreReport report;
  report.prediction_count = pairs.size();
  NgramStats total;
  double rouge_sum = 0.0, meteor_sum = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    total += stats[i];
    rouge_sum += rouge[i];
    meteor_sum += meteor[i];
    report.empty_pairs += empty[i];
  }
  report.bleu = BleuFromStats(total);
  report.rouge_l = rouge_sum / static_cast<double>(pairs.size());
  report.meteor = meteor_sum / static_cast<double>(pairs.size());
  return report;
}

}  // namespace qgen::metrics
