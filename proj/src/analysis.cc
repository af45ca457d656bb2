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

#include "qgen/analysis.h"

#include <algorithm>
#include <cctype>

#include "qgen/errors.h"

namespace qgen::analysis {

std::string_view ToString(QuestionType type) {
  switch (type) {
    case QuestionType::kWho: return "WHO";
    case QuestionType::kWhat: return "WHAT";
    case QuestionType::kWhen: return "WHEN";
    case QuestionType::kWhere: return "WHERE";
    case QuestionType::kWhich: return "WHICH";
    case QuestionType::kHow: return "HOW";
    case QuestionType::kWhy: return "WHY";
    case QuestionType::kOther: return "OTHER";
  }
  return "OTHER";
}

std::string_view ToString(FailureMode mode) {
  switch (mode) {
    case FailureMode::kNone: return "NONE";
    case FailureMode::kRepetitionLoop: return "REPETITION_LOOP";
    case FailureMode::kPrematureCutoff: return "PREMATURE_CUTOFF";
  }
  return "NONE";
}

QuestionType ParseQuestionType(std::string_view name) {
  for (QuestionType t : kAllQuestionTypes)
    if (ToString(t) == name) return t;
  throw ParameterError("unknown question type '" + std::string(name) + "'");
}

FailureMode ParseFailureMode(std::string_view name) {
  for (FailureMode m : {FailureMode::kNone, FailureMode::kRepetitionLoop,
                        FailureMode::kPrematureCutoff})
    if (ToString(m) == name) return m;
  throw ParameterError("unknown failure mode '" + std::string(name) + "'");
}

namespace {

std::optional<QuestionType> Interrogative(std::string_view token) {
  if (token == "who" || token == "whom" || token == "whose")
    return QuestionType::kWho;
  if (token == "what") return QuestionType::kWhat;
  if (token == "when") return QuestionType::kWhen;
  if (token == "where") return QuestionType::kWhere;
  if (token == "which") return QuestionType::kWhich;
  if (token == "how") return QuestionType::kHow;
  if (token == "why") return QuestionType::kWhy;
  return std::nullopt;
}

}  // namespace

QuestionType ClassifyQuestionType(std::string_view question,
                                  const ClassifierConfig& cfg) {
  const metrics::TokenList tokens = metrics::TokenizeEval(question);
  const std::size_t limit =
      cfg.window <= 0 ? tokens.size()
                      : std::min<std::size_t>(tokens.size(), cfg.window);
  for (std::size_t i = 0; i < limit; ++i)
    if (auto t = Interrogative(tokens[i])) return *t;
  return QuestionType::kOther;
}

bool IsIdentification(QuestionType type, const ClassifierConfig& cfg) {
  return cfg.identification.contains(type);
}

double IdentificationRatio(std::span<const std::string> questions,
                           const ClassifierConfig& cfg) {
  if (questions.empty()) throw ParameterError("no questions to classify");
  const auto n = static_cast<std::ptrdiff_t>(questions.size());
  std::size_t hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    if (IsIdentification(ClassifyQuestionType(questions[i], cfg), cfg)) ++hits;
  return static_cast<double>(hits) / static_cast<double>(questions.size());
}

std::size_t ContextCopyScore(std::string_view question,
                             std::string_view context) {
  return metrics::LcsLength(metrics::TokenizeEval(question),
                            metrics::TokenizeEval(context));
}

bool HasConsecutiveRepeat(std::span<const std::string> words, int ngram,
                          int min_repeats) {
  if (ngram < 1 || min_repeats < 2) throw ParameterError("bad repetition rule");
  const auto n = static_cast<std::size_t>(ngram);
  if (words.size() < n * static_cast<std::size_t>(min_repeats)) return false;
  for (std::size_t i = 0; i + n <= words.size(); ++i) {
    const auto gram = words.subspan(i, n);
    int count = 1;
    for (std::size_t k = i + n; k + n <= words.size(); k += n) {
      if (!std::equal(gram.begin(), gram.end(), words.begin() + k)) break;
      if (++count >= min_repeats) return true;
    }
  }
  return false;
}

FailureMode DetectFailure(std::string_view question,
                          decode::FinishReason finish_reason,
                          const RepetitionConfig& cfg) {
  const auto words = metrics::TokenizeEval(question);
  if (HasConsecutiveRepeat(words, cfg.ngram, cfg.min_repeats))
    return FailureMode::kRepetitionLoop;
  const auto last = question.find_last_not_of(" \t\r\n");
  const bool ends_with_mark = last != std::string_view::npos && question[last] == '?';
  if (finish_reason == decode::FinishReason::kLengthCap && !ends_with_mark)
    return FailureMode::kPrematureCutoff;
  return FailureMode::kNone;
}

AnalysisRecord AnalyzeGeneration(const decode::GeneratedQuestion& generated,
                                 std::string_view context,
                                 const ClassifierConfig& classifier,
                                 const RepetitionConfig& repetition) {
  AnalysisRecord r;
  r.paragraph_id = generated.paragraph_id;
  r.lcs_copy_len = ContextCopyScore(generated.text, context);
  r.question_type = ClassifyQuestionType(generated.text, classifier);
  r.is_identification = IsIdentification(r.question_type, classifier);
  r.failure = DetectFailure(generated.text, generated.finish_reason, repetition);
  return r;
}

std::vector<AnalysisRecord> AnalyzeAll(std::span<const AnalysisInput> inputs,
                                       const ClassifierConfig& classifier,
                                       const RepetitionConfig& repetition) {
  std::vector<AnalysisRecord> out(inputs.size());
  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[i] = AnalyzeGeneration(inputs[i].generated, inputs[i].context,
                               classifier, repetition);
  return out;
}

double AnalysisSummary::failure_rate() const {
  if (count == 0) return 0.0;
  return static_cast<double>(count - failure_counts[0]) /
         static_cast<double>(count);
}

AnalysisSummary Summarize(std::span<const AnalysisRecord> records) {
  AnalysisSummary s;
  s.count = records.size();
  if (records.empty()) return s;
  std::size_t lcs_total = 0, ident = 0;
  for (const auto& r : records) {
    lcs_total += r.lcs_copy_len;
    ident += r.is_identification ? 1 : 0;
    ++s.failure_counts[static_cast<std::size_t>(r.failure)];
    ++s.type_counts[static_cast<std::size_t>(r.question_type)];
  }
  s.mean_lcs_copy_len =
      static_cast<double>(lcs_total) / static_cast<double>(records.size());
  s.identification_ratio =
      static_cast<double>(ident) / static_cast<double>(records.size());
  return s;
}

}  // namespace qgen::analysis
