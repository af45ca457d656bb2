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

#include "qgen/dataset.h"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qgen/errors.h"
#include "qgen/utf8.h"

namespace qgen::dataset {
namespace {

using Json = nlohmann::json;

const Json& Field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing field");
  return *it;
}

const Json& ArrayField(const Json& obj, const char* key,
                       const std::string& path) {
  const Json& v = Field(obj, key, path);
  if (!v.is_array()) throw SchemaError(path + "." + key, "expected an array");
  return v;
}

std::string StringField(const Json& obj, const char* key,
                        const std::string& path) {
  const Json& v = Field(obj, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

std::string Indexed(const std::string& path, const char* key, std::size_t i) {
  return path + "." + key + "[" + std::to_string(i) + "]";
}

}  // namespace

std::size_t QADataset::ParagraphCount() const {
  std::size_t n = 0;
  for (const auto& a : articles) n += a.paragraphs.size();
  return n;
}

std::size_t QADataset::QuestionCount() const {
  std::size_t n = 0;
  for (const auto& a : articles)
    for (const auto& p : a.paragraphs) n += p.qas.size();
  return n;
}

std::vector<const ContextParagraph*> QADataset::Paragraphs() const {
  std::vector<const ContextParagraph*> out;
  out.reserve(ParagraphCount());
  for (const auto& a : articles)
    for (const auto& p : a.paragraphs) out.push_back(&p);
  return out;
}

const ContextParagraph* QADataset::FindParagraph(std::string_view id) const {
  for (const auto& a : articles)
    for (const auto& p : a.paragraphs)
      if (p.id == id) return &p;
  return nullptr;
}

ParseResult ParseSquad(std::string_view raw) {
  Json root;
  try {
    root = Json::parse(raw.begin(), raw.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }

  ParseResult result;
  const Json& data = ArrayField(root, "data", "$");
  for (std::size_t ai = 0; ai < data.size(); ++ai) {
    const std::string apath = "data[" + std::to_string(ai) + "]";
    const Json& article_json = data[ai];
    Article article;
    if (article_json.is_object() && article_json.contains("title") &&
        article_json["title"].is_string()) {
      article.title = article_json["title"].get<std::string>();
    }
    const Json& paragraphs = ArrayField(article_json, "paragraphs", apath);
    for (std::size_t pi = 0; pi < paragraphs.size(); ++pi) {
      const std::string ppath = Indexed(apath, "paragraphs", pi);
      ContextParagraph paragraph;
      paragraph.id = std::to_string(ai) + ":" + std::to_string(pi);
      paragraph.context = StringField(paragraphs[pi], "context", ppath);
      if (paragraph.context.empty())
        throw SchemaError(ppath + ".context", "empty context");

      const Json& qas = ArrayField(paragraphs[pi], "qas", ppath);
      for (std::size_t qi = 0; qi < qas.size(); ++qi) {
        const std::string qpath = Indexed(ppath, "qas", qi);
        QAPair qa;
        qa.question = StringField(qas[qi], "question", qpath);
        if (qa.question.empty())
          throw SchemaError(qpath + ".question", "empty question");
        if (qas[qi].contains("id") && qas[qi]["id"].is_string())
          qa.id = qas[qi]["id"].get<std::string>();

        const Json& answers = ArrayField(qas[qi], "answers", qpath);
        if (answers.empty()) {
          result.warnings.push_back(
              {paragraph.id, static_cast<int>(qi), "no answer spans"});
        }
        for (std::size_t k = 0; k < answers.size(); ++k) {
          const std::string spath = Indexed(qpath, "answers", k);
          AnswerSpan span;
          span.text = StringField(answers[k], "text", spath);
          const Json& start = Field(answers[k], "answer_start", spath);
          if (!start.is_number_integer() || start.get<long long>() < 0)
            throw SchemaError(spath + ".answer_start",
                              "expected a non-negative integer");
          span.start_char = start.get<std::size_t>();
          span.verified = SpanMatches(paragraph.context, span);
          if (!span.verified) {
            result.warnings.push_back(
                {paragraph.id, static_cast<int>(qi),
                 "answer " + std::to_string(k) +
                     " text does not match context at answer_start " +
                     std::to_string(span.start_char)});
          }
          qa.answers.push_back(std::move(span));
        }
        paragraph.qas.push_back(std::move(qa));
      }
      if (paragraph.qas.empty()) {
        result.warnings.push_back(
            {paragraph.id, -1, "paragraph has no questions; dropped"});
        continue;
      }
      article.paragraphs.push_back(std::move(paragraph));
    }
    result.dataset.articles.push_back(std::move(article));
  }
  return result;
}

ParseResult LoadSquadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::string raw((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(path.string(), "read failed");
  return ParseSquad(raw);
}

void FormatConfig::Validate() const {
  if (answer_aware && qpl_mode != QplMode::kOqpl)
    throw ConfigError("answer-aware tagging requires the OQPL format");
}

std::string_view ToString(QplMode mode) {
  return mode == QplMode::kAqpl ? "aqpl" : "oqpl";
}

std::string_view ToString(Delimiter delimiter) {
  switch (delimiter) {
    case Delimiter::kArtificial:
      return "artificial";
    case Delimiter::kNaturalQuestion:
      return "question";
    case Delimiter::kNaturalNumber:
      return "number";
  }
  return "artificial";
}

QplMode ParseQplMode(std::string_view name) {
  if (name == "oqpl") return QplMode::kOqpl;
  if (name == "aqpl") return QplMode::kAqpl;
  throw ConfigError("unknown qpl mode '" + std::string(name) + "'");
}

Delimiter ParseDelimiter(std::string_view name) {
  if (name == "artificial") return Delimiter::kArtificial;
  if (name == "question") return Delimiter::kNaturalQuestion;
  if (name == "number") return Delimiter::kNaturalNumber;
  throw ConfigError("unknown delimiter '" + std::string(name) + "'");
}

std::string RenderDelimiter(Delimiter delimiter, int ordinal) {
  if (ordinal < 1) throw ParameterError("delimiter ordinal must be >= 1");
  switch (delimiter) {
    case Delimiter::kArtificial:
      return std::string(kArtificialDelimiter);
    case Delimiter::kNaturalQuestion:
      return std::string(kQuestionDelimiter);
    case Delimiter::kNaturalNumber:
      return std::to_string(ordinal) + ".";
  }
  return {};
}

std::string NormalizeText(std::string_view text) {
  std::string out(text);
  std::replace(out.begin(), out.end(), '\n', ' ');
  std::replace(out.begin(), out.end(), '\r', ' ');
  return out;
}

bool SpanMatches(std::string_view context, const AnswerSpan& span) {
  const auto begin = utf8::ByteOffset(context, span.start_char);
  if (!begin) return false;
  const auto rest = context.substr(*begin);
  const auto len = utf8::ByteOffset(rest, utf8::CodepointCount(span.text));
  if (!len) return false;
  const auto slice = rest.substr(0, *len);
  return slice == span.text || NormalizeText(slice) == NormalizeText(span.text);
}

std::optional<AnswerSpan> ResolveSpan(std::string_view context,
                                      const AnswerSpan& span) {
  if (span.text.empty()) return std::nullopt;
  if (SpanMatches(context, span)) {
    AnswerSpan ok = span;
    ok.verified = true;
    return ok;
  }
  const std::string haystack = NormalizeText(context);
  const std::string needle = NormalizeText(span.text);
  std::optional<AnswerSpan> best;
  std::size_t best_distance = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    const std::size_t cp = utf8::CodepointCount(haystack.substr(0, pos));
    const std::size_t distance =
        cp > span.start_char ? cp - span.start_char : span.start_char - cp;
    if (!best || distance < best_distance) {
      best = AnswerSpan{span.text, cp, true};
      best_distance = distance;
    }
  }
  return best;
}

std::string MarkAnswerSpan(std::string_view context, const AnswerSpan& span) {
  if (!span.verified || !SpanMatches(context, span))
    throw SpanError("answer span '" + span.text + "' at " +
                    std::to_string(span.start_char) +
                    " is not verified against the context");
  const std::size_t begin = *utf8::ByteOffset(context, span.start_char);
  const std::size_t len =
      *utf8::ByteOffset(context.substr(begin), utf8::CodepointCount(span.text));
  std::string out;
  out.reserve(context.size() + 14);
  out.append(context.substr(0, begin));
  out.append(kAnswerStart);
  out.push_back(' ');
  out.append(context.substr(begin, len));
  out.push_back(' ');
  out.append(kAnswerEnd);
  out.append(context.substr(begin + len));
  return out;
}

std::vector<TrainingExample> BuildParagraphExamples(
    const ContextParagraph& paragraph, const FormatConfig& cfg) {
  cfg.Validate();
  const std::string context = NormalizeText(paragraph.context);
  std::vector<TrainingExample> out;

  if (cfg.qpl_mode == QplMode::kAqpl) {
    TrainingExample ex;
    ex.source_paragraph_id = paragraph.id;
    ex.line = context;
    for (std::size_t i = 0; i < paragraph.qas.size(); ++i) {
      ex.line += ' ';
      ex.line += RenderDelimiter(cfg.delimiter, static_cast<int>(i) + 1);
      ex.line += ' ';
      ex.line += NormalizeText(paragraph.qas[i].question);
      ex.source_question_indices.push_back(static_cast<int>(i));
    }
    out.push_back(std::move(ex));
    return out;
  }

  out.reserve(paragraph.qas.size());
  for (std::size_t i = 0; i < paragraph.qas.size(); ++i) {
    const QAPair& qa = paragraph.qas[i];
    std::string ctx = context;
    if (cfg.answer_aware) {
      if (qa.answers.empty())
        throw SpanError("paragraph " + paragraph.id + " question " +
                        std::to_string(i) + " has no answer to mark");
      auto span = ResolveSpan(context, qa.answers.front());
      if (!span)
        throw SpanError("paragraph " + paragraph.id + " question " +
                        std::to_string(i) + ": answer '" +
                        qa.answers.front().text + "' not found in context");
      ctx = MarkAnswerSpan(context, *span);
    }
    TrainingExample ex;
    ex.source_paragraph_id = paragraph.id;
    ex.source_question_indices = {static_cast<int>(i)};
    ex.line = std::move(ctx);
    ex.line += ' ';
    ex.line += RenderDelimiter(cfg.delimiter, 1);
    ex.line += ' ';
    ex.line += NormalizeText(qa.question);
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<TrainingExample> BuildExamples(const QADataset& ds,
                                           const FormatConfig& cfg) {
  cfg.Validate();
  const auto paragraphs = ds.Paragraphs();
  const auto n = static_cast<std::ptrdiff_t>(paragraphs.size());
  std::vector<std::vector<TrainingExample>> per_paragraph(paragraphs.size());
  std::vector<std::exception_ptr> errors(paragraphs.size());

#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      per_paragraph[i] = BuildParagraphExamples(*paragraphs[i], cfg);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<TrainingExample> out;
  std::size_t total = 0;
  for (const auto& v : per_paragraph) total += v.size();
  out.reserve(total);
  for (auto& v : per_paragraph)
    std::move(v.begin(), v.end(), std::back_inserter(out));
  return out;
}

std::string RenderPrompt(std::string_view context, const FormatConfig& cfg) {
  return NormalizeText(context) + " " + RenderDelimiter(cfg.delimiter, 1);
}

SplitLine SplitExampleLine(std::string_view line, const FormatConfig& cfg) {
  SplitLine out;
  auto separator = [&](int ordinal) {
    return " " + RenderDelimiter(cfg.delimiter, ordinal) + " ";
  };
  std::string sep = separator(1);
  // Contexts are long and may contain text like " 1. ", so the boundary is
  // searched from the right whenever the first delimiter occurs only once.
  const bool from_right = cfg.qpl_mode == QplMode::kOqpl ||
                          cfg.delimiter == Delimiter::kNaturalNumber;
  auto pos = from_right ? line.rfind(sep) : line.find(sep);
  if (pos == std::string_view::npos) {
    out.context = std::string(line);
    return out;
  }
  out.context = std::string(line.substr(0, pos));
  line.remove_prefix(pos + sep.size());
  const bool numbered = cfg.delimiter == Delimiter::kNaturalNumber;
  const std::size_t max_questions =
      cfg.qpl_mode == QplMode::kOqpl ? 1 : std::string::npos;
  for (int ordinal = 2;; ++ordinal) {
    if (out.questions.size() + 1 == max_questions) break;
    sep = numbered ? separator(ordinal) : separator(1);
    pos = line.find(sep);
    if (pos == std::string_view::npos) break;
    out.questions.emplace_back(line.substr(0, pos));
    line.remove_prefix(pos + sep.size());
  }
  out.questions.emplace_back(line);
  return out;
}

std::size_t EmitLmText(std::span<const TrainingExample> examples,
                       std::ostream& out) {
  std::size_t bytes = 0;
  for (const auto& ex : examples) {
    out.write(ex.line.data(), static_cast<std::streamsize>(ex.line.size()));
    out.put('\n');
    bytes += ex.line.size() + 1;
  }
  return bytes;
}

std::size_t EmitLmText(std::span<const TrainingExample> examples,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  const std::size_t bytes = EmitLmText(examples, out);
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
  return bytes;
}

}  // namespace qgen::dataset
