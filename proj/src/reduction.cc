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
#include <exception>
#include <string>
#include <vector>

#include "qgen/analysis.h"
#include "qgen/errors.h"

namespace qgen::analysis {
namespace {

std::string JoinFirst(const std::vector<std::string>& sentences, int k) {
  std::string out;
  for (int i = 0; i < k; ++i) {
    if (i > 0) out += ' ';
    out += sentences[i];
  }
  return out;
}

std::array<double, metrics::kMaxOrder> BestSentenceBleu(
    const metrics::TokenList& prediction,
    const std::vector<metrics::TokenList>& references) {
  std::array<double, metrics::kMaxOrder> best{};
  for (const auto& ref : references) {
    const auto stats = metrics::CollectNgramStats(
        prediction, std::span<const metrics::TokenList>(&ref, 1));
    const auto bleu = metrics::SmoothedBleuFromStats(stats);
    for (int n = 0; n < metrics::kMaxOrder; ++n)
      best[n] = std::max(best[n], bleu[n]);
  }
  return best;
}

}  // namespace

ReductionCurve SentenceReductionExperiment(
    const dataset::ContextParagraph& paragraph, const decode::Backend& backend,
    const decode::GenerationParams& params, const dataset::FormatConfig& cfg,
    int max_sentences) {
  cfg.Validate();
  if (cfg.answer_aware)
    throw ConfigError("sentence reduction does not support answer-aware input");
  params.Validate();

  const auto sentences = SplitSentences(dataset::NormalizeText(paragraph.context));
  const int n = static_cast<int>(sentences.size());
  if (n == 0) throw ParameterError("paragraph " + paragraph.id + " is empty");
  if (n > max_sentences)
    throw ParameterError("paragraph " + paragraph.id + " has " +
                         std::to_string(n) + " sentences, limit " +
                         std::to_string(max_sentences));

  std::vector<metrics::TokenList> references;
  for (const auto& qa : paragraph.qas)
    references.push_back(metrics::TokenizeEval(qa.question));

  ReductionCurve curve;
  curve.paragraph_id = paragraph.id;
  for (int k = n; k >= 1; --k) {
    const std::string prompt = dataset::RenderPrompt(JoinFirst(sentences, k), cfg);
    const std::string session_id = paragraph.id + "#" + std::to_string(k);
    try {
      const auto generated =
          decode::GenerateQuestion(backend, prompt, params, session_id);
      CurvePoint point;
      point.sentence_count = k;
      point.bleu =
          BestSentenceBleu(metrics::TokenizeEval(generated.text), references);
      curve.points.push_back(point);
    } catch (const TransportError& e) {
      curve.error = e.what();
      break;
    } catch (const ProtocolError& e) {
      curve.error = e.what();
      break;
    }
  }
  std::reverse(curve.points.begin(), curve.points.end());
  return curve;
}

std::vector<ReductionCurve> RunReductionExperiments(
    std::span<const dataset::ContextParagraph* const> paragraphs,
    const decode::Backend& backend, const decode::GenerationParams& params,
    const dataset::FormatConfig& cfg, const ReductionBounds& bounds,
    int max_in_flight) {
  if (bounds.min_sentences < 1 || bounds.max_sentences < bounds.min_sentences)
    throw ParameterError("invalid sentence bounds");
  if (max_in_flight < 1) throw ParameterError("max_in_flight must be >= 1");

  std::vector<const dataset::ContextParagraph*> selected;
  for (const auto* p : paragraphs) {
    const auto count = static_cast<int>(
        SplitSentences(dataset::NormalizeText(p->context)).size());
    if (count >= bounds.min_sentences && count <= bounds.max_sentences)
      selected.push_back(p);
  }

  std::vector<ReductionCurve> curves(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  const auto count = static_cast<long>(selected.size());
#pragma omp parallel for schedule(dynamic) num_threads(max_in_flight)
  for (long i = 0; i < count; ++i) {
    try {
      curves[i] = SentenceReductionExperiment(*selected[i], backend, params,
                                              cfg, bounds.max_sentences);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return curves;
}

}  // namespace qgen::analysis
