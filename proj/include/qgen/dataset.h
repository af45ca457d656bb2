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

#ifndef QGEN_DATASET_H_
#define QGEN_DATASET_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgen::dataset {

// An answer span. start_char counts Unicode scalar values, not bytes.
struct AnswerSpan {
  std::string text;
  std::size_t start_char = 0;
  bool verified = false;
};

struct QAPair {
  std::string id;  // the source "id" field, empty when absent
  std::string question;
  std::vector<AnswerSpan> answers;
};

struct ContextParagraph {
  std::string id;  // "<article index>:<paragraph index>", unique per dataset
  std::string context;
  std::vector<QAPair> qas;
};

struct Article {
  std::string title;
  std::vector<ContextParagraph> paragraphs;
};

struct QADataset {
  std::vector<Article> articles;

  std::size_t ParagraphCount() const;
  std::size_t QuestionCount() const;
  // Flattened view in document order.
  std::vector<const ContextParagraph*> Paragraphs() const;
  const ContextParagraph* FindParagraph(std::string_view id) const;
};

// question_index is -1 for paragraph-level warnings.
struct ParseWarning {
  std::string paragraph_id;
  int question_index = -1;
  std::string reason;
};

struct ParseResult {
  QADataset dataset;
  std::vector<ParseWarning> warnings;
};

// Parses the SQuAD v1.1 schema:
//   data[].{title, paragraphs[].{context, qas[].{id, question,
//   answers[].{text, answer_start}}}}
// Throws ParseError on malformed JSON and SchemaError on missing or mistyped
// fields. Answer spans that do not match the context are kept with
// verified=false and reported as warnings. Paragraphs without questions are
// dropped with a warning.
ParseResult ParseSquad(std::string_view raw);
ParseResult LoadSquadFile(const std::filesystem::path& path);

enum class QplMode { kAqpl, kOqpl };
enum class Delimiter { kArtificial, kNaturalQuestion, kNaturalNumber };

struct FormatConfig {
  QplMode qpl_mode = QplMode::kOqpl;
  Delimiter delimiter = Delimiter::kArtificial;
  bool answer_aware = false;

  // Answer-aware tagging is only defined for OQPL. Throws ConfigError.
  void Validate() const;
};

std::string_view ToString(QplMode mode);
std::string_view ToString(Delimiter delimiter);
// Accepts the CLI spellings: oqpl|aqpl and artificial|question|number.
QplMode ParseQplMode(std::string_view name);
Delimiter ParseDelimiter(std::string_view name);

inline constexpr std::string_view kArtificialDelimiter = "[SEP]";
inline constexpr std::string_view kQuestionDelimiter = "Question:";
inline constexpr std::string_view kAnswerStart = "[ANSS]";
inline constexpr std::string_view kAnswerEnd = "[ANSE]";

// "[SEP]", "Question:" or "<ordinal>." Throws ParameterError if ordinal < 1.
std::string RenderDelimiter(Delimiter delimiter, int ordinal);

// Replaces every CR and LF with a space. One-for-one, so character offsets
// into the context stay valid.
std::string NormalizeText(std::string_view text);

// True when context[start_char, start_char + len(text)) equals span.text,
// comparing after NormalizeText on both sides.
bool SpanMatches(std::string_view context, const AnswerSpan& span);

// Finds the occurrence of span.text in context closest to span.start_char.
std::optional<AnswerSpan> ResolveSpan(std::string_view context,
                                      const AnswerSpan& span);

// Wraps the span in "[ANSS] " ... " [ANSE]". Throws SpanError if the span is
// unverified or out of range.
std::string MarkAnswerSpan(std::string_view context, const AnswerSpan& span);

struct TrainingExample {
  std::string line;
  std::string source_paragraph_id;
  std::vector<int> source_question_indices;
};

// OQPL: one "<context> <delim> <question>" line per question.
// AQPL: one "<context> <delim 1> <q1> <delim 2> <q2> ..." line per paragraph.
// Output order follows the dataset. Paragraphs are rendered in parallel.
std::vector<TrainingExample> BuildExamples(const QADataset& ds,
                                           const FormatConfig& cfg);

// Examples for a single paragraph.
std::vector<TrainingExample> BuildParagraphExamples(
    const ContextParagraph& paragraph, const FormatConfig& cfg);

// Generation prompt: "<context> <first delimiter>". Contexts are normalized.
std::string RenderPrompt(std::string_view context, const FormatConfig& cfg);

struct SplitLine {
  std::string context;
  std::vector<std::string> questions;
};

// Inverse of BuildExamples for one line. The context ends at the last
// occurrence of the first delimiter (OQPL, or numbered delimiters) or at the
// first one (AQPL with a repeated delimiter). Questions must not contain
// delimiter text.
SplitLine SplitExampleLine(std::string_view line, const FormatConfig& cfg);

// Writes one example per line, each terminated by '\n'. Returns bytes written.
std::size_t EmitLmText(std::span<const TrainingExample> examples,
                       std::ostream& out);
std::size_t EmitLmText(std::span<const TrainingExample> examples,
                       const std::filesystem::path& path);

}  // namespace qgen::dataset

#endif  // QGEN_DATASET_H_
