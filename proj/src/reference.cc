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

#include "qgen/reference.h"

#include <algorithm>

#include "qgen/errors.h"

namespace qgen::reference {

metrics::ScoreReport ScoreCorpusSerial(
    std::span<const metrics::EvalPair> pairs) {
  if (pairs.empty()) throw ParameterError("empty corpus");
  metrics::ScoreReport report;
  metrics::NgramStats total;
  double rouge_sum = 0.0, meteor_sum = 0.0;
  for (const auto& p : pairs) {
    if (p.references.empty()) throw ParameterError("pair without references");
    total += metrics::CollectNgramStats(p.prediction, p.references);
    double best_rouge = 0.0, best_meteor = 0.0;
    bool empty = false;
    for (const auto& ref : p.references) {
      if (p.prediction.empty() || ref.empty()) empty = true;
      best_rouge = std::max(best_rouge, metrics::RougeL(p.prediction, ref));
      best_meteor = std::max(best_meteor, metrics::Meteor(p.prediction, ref));
    }
    rouge_sum += best_rouge;
    meteor_sum += best_meteor;
    report.empty_pairs += empty ? 1 : 0;
  }
  report.prediction_count = pairs.size();
  report.bleu = metrics::BleuFromStats(total);
  report.rouge_l = rouge_sum / static_cast<double>(pairs.size());
  report.meteor = meteor_sum / static_cast<double>(pairs.size());
  return report;
}

std::vector<dataset::TrainingExample> BuildExamplesSerial(
    const dataset::QADataset& ds, const dataset::FormatConfig& cfg) {
  cfg.Validate();
  std::vector<dataset::TrainingExample> out;
  for (const auto* paragraph : ds.Paragraphs()) {
    auto examples = dataset::BuildParagraphExamples(*paragraph, cfg);
    std::move(examples.begin(), examples.end(), std::back_inserter(out));
  }
  return out;
}

double IdentificationRatioSerial(std::span<const std::string> questions,
                                 const analysis::ClassifierConfig& cfg) {
  if (questions.empty()) throw ParameterError("no questions to classify");
  std::size_t hits = 0;
  for (const auto& q : questions)
    if (analysis::IsIdentification(analysis::ClassifyQuestionType(q, cfg), cfg))
      ++hits;
  return static_cast<double>(hits) / static_cast<double>(questions.size());
}

std::vector<analysis::AnalysisRecord> AnalyzeAllSerial(
    std::span<const analysis::AnalysisInput> inputs,
    const analysis::ClassifierConfig& classifier,
    const analysis::RepetitionConfig& repetition) {
  std::vector<analysis::AnalysisRecord> out;
  out.reserve(inputs.size());
  for (const auto& in : inputs)
    out.push_back(analysis::AnalyzeGeneration(in.generated, in.context,
                                              classifier, repetition));
  return out;
}

}  // namespace qgen::reference
