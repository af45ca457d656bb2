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

#ifndef QGEN_ANALYSIS_H_
#define QGEN_ANALYSIS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/backend.h"
#include "qgen/dataset.h"
#include "qgen/decode.h"
#include "qgen/metrics.h"

namespace qgen::analysis {

enum class QuestionType { kWho, kWhat, kWhen, kWhere, kWhich, kHow, kWhy, kOther };
enum class FailureMode { kNone, kRepetitionLoop, kPrematureCutoff };

std::string_view ToString(QuestionType type);  // WHO, WHAT, ... OTHER
std::string_view ToString(FailureMode mode);   // NONE, REPETITION_LOOP, ...
QuestionType ParseQuestionType(std::string_view name);
FailureMode ParseFailureMode(std::string_view name);

inline constexpr std::array<QuestionType, 8> kAllQuestionTypes = {
    QuestionType::kWho,   QuestionType::kWhat, QuestionType::kWhen,
    QuestionType::kWhere, QuestionType::kWhich, QuestionType::kHow,
    QuestionType::kWhy,   QuestionType::kOther};

struct ClassifierConfig {
  // Number of leading evaluation tokens searched for an interrogative. 0
  // searches the whole question.
  int window = 2;
  std::set<QuestionType> identification = {
      QuestionType::kWho, QuestionType::kWhat, QuestionType::kWhen,
      QuestionType::kWhere};
};

// First interrogative among the leading window tokens. "whom" and "whose"
// count as WHO. Case-insensitive and total.
QuestionType ClassifyQuestionType(std::string_view question,
                                  const ClassifierConfig& cfg = {});

bool IsIdentification(QuestionType type, const ClassifierConfig& cfg = {});

// Fraction of questions whose type is in cfg.identification. Parallel over
// questions. Throws ParameterError on an empty list.
double IdentificationRatio(std::span<const std::string> questions,
                           const ClassifierConfig& cfg = {});

// Token-level LCS between question and context, with TokenizeEval on both.
std::size_t ContextCopyScore(std::string_view question,
                             std::string_view context);

struct RepetitionConfig {
  int ngram = 3;
  int min_repeats = 3;  // consecutive occurrences
};

// True if some word n-gram occurs min_repeats times back to back.
bool HasConsecutiveRepeat(std::span<const std::string> words, int ngram,
                          int min_repeats);

// REPETITION_LOOP if the whitespace-split words contain a back-to-back
// repeated n-gram; otherwise PREMATURE_CUTOFF if generation hit the length
// cap and the text does not end in '?'; otherwise NONE.
FailureMode DetectFailure(std::string_view question,
                          decode::FinishReason finish_reason,
                          const RepetitionConfig& cfg = {});

struct AnalysisRecord {
  std::string paragraph_id;
  std::size_t lcs_copy_len = 0;
  QuestionType question_type = QuestionType::kOther;
  bool is_identification = false;
  FailureMode failure = FailureMode::kNone;
};

AnalysisRecord AnalyzeGeneration(const decode::GeneratedQuestion& generated,
                                 std::string_view context,
                                 const ClassifierConfig& classifier = {},
                                 const RepetitionConfig& repetition = {});

struct AnalysisInput {
  decode::GeneratedQuestion generated;
  std::string context;
};

// Parallel over inputs; output in input order.
std::vector<AnalysisRecord> AnalyzeAll(std::span<const AnalysisInput> inputs,
                                       const ClassifierConfig& classifier = {},
                                       const RepetitionConfig& repetition = {});

struct AnalysisSummary {
  std::size_t count = 0;
  double mean_lcs_copy_len = 0.0;
  double identification_ratio = 0.0;
  std::array<std::size_t, 3> failure_counts{};  // indexed by FailureMode
  std::array<std::size_t, 8> type_counts{};     // indexed by QuestionType

  double failure_rate() const;
};

AnalysisSummary Summarize(std::span<const AnalysisRecord> records);

// Rule-based sentence splitter. Breaks after '.', '!' or '?' (plus any
// closing quotes or brackets) when followed by whitespace and a character
// that can open a sentence, unless the period ends a known abbreviation, an
// initial or a dotted acronym. Sentences are trimmed and never empty.
std::vector<std::string> SplitSentences(std::string_view text);

struct CurvePoint {
  int sentence_count = 0;
  std::array<double, metrics::kMaxOrder> bleu{};
};

struct ReductionCurve {
  std::string paragraph_id;
  std::vector<CurvePoint> points;  // increasing sentence_count
  std::optional<std::string> error;
};

inline constexpr int kMaxReductionSentences = 30;

// Generates from the full context, then from the context with its last
// sentence removed, down to one sentence. Each output is scored with
// smoothed sentence BLEU against every reference question of the paragraph,
// keeping the best score per order. A backend failure ends the run early and
// returns the points gathered so far with error set. Throws ParameterError
// if the context has more than max_sentences sentences and ConfigError for
// answer-aware formats.
ReductionCurve SentenceReductionExperiment(
    const dataset::ContextParagraph& paragraph, const decode::Backend& backend,
    const decode::GenerationParams& params, const dataset::FormatConfig& cfg,
    int max_sentences = kMaxReductionSentences);

struct ReductionBounds {
  int min_sentences = 2;
  int max_sentences = kMaxReductionSentences;
};

// Runs the experiment for every paragraph whose sentence count lies within
// bounds, up to max_in_flight at a time, in input order.
std::vector<ReductionCurve> RunReductionExperiments(
    std::span<const dataset::ContextParagraph* const> paragraphs,
    const decode::Backend& backend, const decode::GenerationParams& params,
    const dataset::FormatConfig& cfg, const ReductionBounds& bounds,
    int max_in_flight = 4);

}  // namespace qgen::analysis

#endif  // QGEN_ANALYSIS_H_
