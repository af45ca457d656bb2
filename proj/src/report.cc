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

#include "qgen/report.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "qgen/errors.h"
#include "qgen/hash.h"
#include "qgen/jsonl.h"

namespace qgen::report {
namespace {

const Json& At(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing");
  return *it;
}

std::string Str(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = At(j, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

double Num(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = At(j, key, path);
  if (!v.is_number()) throw SchemaError(path + "." + key, "expected a number");
  return v.get<double>();
}

template <typename Int>
Int Integer(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = At(j, key, path);
  if (!v.is_number_integer())
    throw SchemaError(path + "." + key, "expected an integer");
  return v.get<Int>();
}

bool Bool(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = At(j, key, path);
  if (!v.is_boolean()) throw SchemaError(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

// Converts library exceptions from enum parsers into schema errors.
template <typename F>
auto Enum(const std::string& path, F parse) {
  try {
    return parse();
  } catch (const ParameterError& e) {
    throw SchemaError(path, e.what());
  } catch (const ConfigError& e) {
    throw SchemaError(path, e.what());
  }
}

void CheckHeader(const Json& j, std::string_view kind) {
  if (!j.is_object()) throw SchemaError("$", "expected an object");
  if (Integer<int>(j, "schema_version", "$") != kSchemaVersion)
    throw SchemaError("$.schema_version", "unsupported version");
  if (Str(j, "kind", "$") != kind)
    throw SchemaError("$.kind", "expected '" + std::string(kind) + "'");
}

Json Header(std::string_view kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = std::string(kind);
  return j;
}

void Flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, Json>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      Flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else {
    out.emplace_back(prefix, j);
  }
}

std::optional<std::string> FirstDifference(const Json& a, const Json& b) {
  std::vector<std::pair<std::string, Json>> fa, fb;
  Flatten(a, "", fa);
  Flatten(b, "", fb);
  for (const auto& [key, value] : fa) {
    auto it = std::find_if(fb.begin(), fb.end(),
                           [&](const auto& kv) { return kv.first == key; });
    if (it == fb.end() || it->second != value) return key;
  }
  for (const auto& [key, value] : fb) {
    auto it = std::find_if(fa.begin(), fa.end(),
                           [&](const auto& kv) { return kv.first == key; });
    if (it == fa.end()) return key;
  }
  return std::nullopt;
}

std::string RunLabel(const RunManifest& m) {
  std::string label = std::string(dataset::ToString(m.format.qpl_mode)) + "/" +
                      std::string(dataset::ToString(m.format.delimiter));
  if (m.format.answer_aware) label += "+answer_aware";
  return label;
}

Json ScoresBlock(const metrics::ScoreReport& s) {
  Json j;
  for (int n = 0; n < metrics::kMaxOrder; ++n)
    j["bleu" + std::to_string(n + 1)] = s.bleu[n];
  j["meteor"] = s.meteor;
  j["rouge_l"] = s.rouge_l;
  j["prediction_count"] = s.prediction_count;
  j["empty_pairs"] = s.empty_pairs;
  return j;
}

Json ClassifierBlock(const analysis::ClassifierConfig& c) {
  Json j;
  j["window"] = c.window;
  Json ident = Json::array();
  for (auto t : analysis::kAllQuestionTypes)
    if (c.identification.contains(t)) ident.push_back(std::string(analysis::ToString(t)));
  j["identification"] = ident;
  return j;
}

Json SummaryBlock(const analysis::AnalysisSummary& s) {
  Json j;
  j["count"] = s.count;
  Json failures;
  for (auto mode : {analysis::FailureMode::kNone,
                    analysis::FailureMode::kRepetitionLoop,
                    analysis::FailureMode::kPrematureCutoff})
    failures[std::string(analysis::ToString(mode))] =
        s.failure_counts[static_cast<std::size_t>(mode)];
  j["failure_counts"] = failures;
  j["failure_rate"] = s.failure_rate();
  j["identification_ratio"] = s.identification_ratio;
  j["mean_lcs_copy_len"] = s.mean_lcs_copy_len;
  Json types;
  for (auto t : analysis::kAllQuestionTypes)
    types[std::string(analysis::ToString(t))] =
        s.type_counts[static_cast<std::size_t>(t)];
  j["question_types"] = types;
  return j;
}

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

constexpr const char* kRowKeys[] = {"bleu1", "bleu2", "bleu3",
                                    "bleu4", "meteor", "rouge_l"};

std::optional<double> MetricRow::*const kRowFields[] = {
    &MetricRow::bleu1, &MetricRow::bleu2, &MetricRow::bleu3,
    &MetricRow::bleu4, &MetricRow::meteor, &MetricRow::rouge_l};

}  // namespace

Json ToJson(const metrics::MetricVariant& v) {
  Json j;
  j["tokenizer"] = v.tokenizer;
  j["bleu_max_order"] = v.bleu_max_order;
  j["bleu_smoothing"] = v.bleu_smoothing;
  j["multi_reference"] = v.multi_reference;
  j["rouge_beta"] = v.rouge_beta;
  j["meteor_stages"] = v.meteor_stages;
  j["meteor"] = {{"alpha", v.meteor.alpha},
                 {"beta", v.meteor.beta},
                 {"gamma", v.meteor.gamma}};
  return j;
}

metrics::MetricVariant MetricVariantFromJson(const Json& j) {
  const std::string p = "metric_variant";
  metrics::MetricVariant v;
  v.tokenizer = Str(j, "tokenizer", p);
  v.bleu_max_order = Integer<int>(j, "bleu_max_order", p);
  v.bleu_smoothing = Str(j, "bleu_smoothing", p);
  v.multi_reference = Bool(j, "multi_reference", p);
  v.rouge_beta = Num(j, "rouge_beta", p);
  v.meteor_stages = Str(j, "meteor_stages", p);
  const Json& m = At(j, "meteor", p);
  v.meteor.alpha = Num(m, "alpha", p + ".meteor");
  v.meteor.beta = Num(m, "beta", p + ".meteor");
  v.meteor.gamma = Num(m, "gamma", p + ".meteor");
  return v;
}

Json ToJson(const RunManifest& m) {
  Json j;
  j["format"] = {{"qpl_mode", std::string(dataset::ToString(m.format.qpl_mode))},
                 {"delimiter", std::string(dataset::ToString(m.format.delimiter))},
                 {"answer_aware", m.format.answer_aware}};
  j["generation"] = {{"temperature", m.generation.temperature},
                     {"top_p", m.generation.top_p},
                     {"max_new_tokens", m.generation.max_new_tokens},
                     {"stop_text", m.generation.stop_text},
                     {"rng_seed", m.generation.rng_seed}};
  j["backend"] = {{"kind", std::string(decode::ToString(m.backend.kind))},
                  {"endpoint", m.backend.endpoint},
                  {"sampling_locus",
                   std::string(decode::ToString(m.backend.sampling_locus))}};
  j["metric_variant"] =
      m.metric_variant ? ToJson(*m.metric_variant) : Json(nullptr);
  j["dataset_fingerprint"] = m.dataset_fingerprint;
  j["timestamp"] = m.timestamp;
  return j;
}

RunManifest ManifestFromJson(const Json& j) {
  const std::string p = "manifest";
  RunManifest m;
  const Json& f = At(j, "format", p);
  m.format.qpl_mode = Enum(p + ".format.qpl_mode", [&] {
    return dataset::ParseQplMode(Str(f, "qpl_mode", p + ".format"));
  });
  m.format.delimiter = Enum(p + ".format.delimiter", [&] {
    return dataset::ParseDelimiter(Str(f, "delimiter", p + ".format"));
  });
  m.format.answer_aware = Bool(f, "answer_aware", p + ".format");

  const Json& g = At(j, "generation", p);
  const std::string gp = p + ".generation";
  m.generation.temperature = Num(g, "temperature", gp);
  m.generation.top_p = Num(g, "top_p", gp);
  m.generation.max_new_tokens = Integer<int>(g, "max_new_tokens", gp);
  m.generation.stop_text = Str(g, "stop_text", gp);
  m.generation.rng_seed = Integer<std::uint64_t>(g, "rng_seed", gp);

  const Json& b = At(j, "backend", p);
  m.backend.kind = Enum(p + ".backend.kind", [&] {
    return decode::ParseBackendKind(Str(b, "kind", p + ".backend"));
  });
  m.backend.endpoint = Str(b, "endpoint", p + ".backend");
  m.backend.sampling_locus = Enum(p + ".backend.sampling_locus", [&] {
    return decode::ParseSamplingLocus(Str(b, "sampling_locus", p + ".backend"));
  });

  const Json& v = At(j, "metric_variant", p);
  if (!v.is_null()) m.metric_variant = MetricVariantFromJson(v);
  m.dataset_fingerprint = Str(j, "dataset_fingerprint", p);
  m.timestamp = Str(j, "timestamp", p);
  return m;
}

std::optional<std::string> FirstManifestDifference(const RunManifest& a,
                                                   const RunManifest& b) {
  Json ja = ToJson(a), jb = ToJson(b);
  for (Json* j : {&ja, &jb}) {
    j->erase("timestamp");
    j->erase("metric_variant");
  }
  return FirstDifference(ja, jb);
}

std::optional<std::string> FirstVariantDifference(
    const metrics::MetricVariant& a, const metrics::MetricVariant& b) {
  return FirstDifference(ToJson(a), ToJson(b));
}

std::string CurrentTimestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    char* end = nullptr;
    const long long v = std::strtoll(epoch, &end, 10);
    if (end && *end == '\0' && v >= 0) t = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> MetricNotes() {
  return {
      "METEOR aligns exact and Porter-stem matches only; no synonym or "
      "paraphrase stage",
      "ROUGE-L uses beta 1.2 and the best reference per prediction",
      "BLEU is corpus-level with clipped counts, closest reference length and "
      "no smoothing",
      "Evaluation tokens are lowercased with punctuation split off",
  };
}

Json ScoresDocument(const ScoredRun& run) {
  if (!run.manifest.metric_variant)
    throw ParameterError("scored run has no metric variant");
  Json j = Header("scores");
  j["manifest"] = ToJson(run.manifest);
  j["metric_notes"] = MetricNotes();
  j["scores"] = ScoresBlock(run.scores);
  return j;
}

ScoredRun ParseScoresDocument(const Json& j) {
  CheckHeader(j, "scores");
  ScoredRun run;
  run.manifest = ManifestFromJson(At(j, "manifest", "$"));
  if (!run.manifest.metric_variant)
    throw SchemaError("manifest.metric_variant", "missing");
  const Json& s = At(j, "scores", "$");
  for (int n = 0; n < metrics::kMaxOrder; ++n)
    run.scores.bleu[n] = Num(s, "bleu" + std::to_string(n + 1), "scores");
  run.scores.meteor = Num(s, "meteor", "scores");
  run.scores.rouge_l = Num(s, "rouge_l", "scores");
  run.scores.prediction_count =
      Integer<std::size_t>(s, "prediction_count", "scores");
  run.scores.empty_pairs = Integer<std::size_t>(s, "empty_pairs", "scores");
  return run;
}

Json AnalysisDocument(const AnalyzedRun& run) {
  Json j = Header("analysis");
  j["manifest"] = ToJson(run.manifest);
  j["classifier"] = ClassifierBlock(run.classifier);
  j["summary"] = SummaryBlock(analysis::Summarize(run.records));
  Json records = Json::array();
  for (const auto& r : run.records) {
    Json rec;
    rec["paragraph_id"] = r.paragraph_id;
    rec["lcs_copy_len"] = r.lcs_copy_len;
    rec["question_type"] = std::string(analysis::ToString(r.question_type));
    rec["is_identification"] = r.is_identification;
    rec["failure"] = std::string(analysis::ToString(r.failure));
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  return j;
}

AnalyzedRun ParseAnalysisDocument(const Json& j) {
  CheckHeader(j, "analysis");
  AnalyzedRun run;
  run.manifest = ManifestFromJson(At(j, "manifest", "$"));
  const Json& c = At(j, "classifier", "$");
  run.classifier.window = Integer<int>(c, "window", "classifier");
  run.classifier.identification.clear();
  const Json& ident = At(c, "identification", "classifier");
  if (!ident.is_array())
    throw SchemaError("classifier.identification", "expected an array");
  for (const auto& t : ident) {
    if (!t.is_string())
      throw SchemaError("classifier.identification", "expected strings");
    run.classifier.identification.insert(Enum("classifier.identification", [&] {
      return analysis::ParseQuestionType(t.get<std::string>());
    }));
  }
  const Json& records = At(j, "records", "$");
  if (!records.is_array()) throw SchemaError("records", "expected an array");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string p = "records[" + std::to_string(i) + "]";
    const Json& r = records[i];
    analysis::AnalysisRecord rec;
    rec.paragraph_id = Str(r, "paragraph_id", p);
    rec.lcs_copy_len = Integer<std::size_t>(r, "lcs_copy_len", p);
    rec.question_type = Enum(p + ".question_type", [&] {
      return analysis::ParseQuestionType(Str(r, "question_type", p));
    });
    rec.is_identification = Bool(r, "is_identification", p);
    rec.failure = Enum(p + ".failure", [&] {
      return analysis::ParseFailureMode(Str(r, "failure", p));
    });
    run.records.push_back(std::move(rec));
  }
  return run;
}

Json ToJson(const MetricRow& row) {
  Json j;
  j["label"] = row.label;
  for (std::size_t i = 0; i < std::size(kRowKeys); ++i) {
    const auto& cell = row.*kRowFields[i];
    j[kRowKeys[i]] = cell ? Json(*cell) : Json(nullptr);
  }
  return j;
}

MetricRow MetricRowFromJson(const Json& j, std::string label) {
  if (!j.is_object()) throw SchemaError("row", "expected an object");
  MetricRow row;
  row.label = std::move(label);
  if (row.label.empty()) {
    if (auto it = j.find("label"); it != j.end() && it->is_string())
      row.label = it->get<std::string>();
  }
  for (std::size_t i = 0; i < std::size(kRowKeys); ++i) {
    auto it = j.find(kRowKeys[i]);
    if (it == j.end() || it->is_null()) continue;
    if (!it->is_number())
      throw SchemaError(std::string("row.") + kRowKeys[i], "expected a number");
    row.*kRowFields[i] = it->get<double>();
  }
  return row;
}

Json Aggregate(const ScoredRun& scores, const AnalyzedRun& analysis,
               const std::optional<MetricRow>& reference_row) {
  if (analysis.records.empty())
    throw ParameterError("cannot aggregate an empty analysis");
  if (scores.scores.prediction_count == 0)
    throw ParameterError("cannot aggregate an empty score report");
  if (!scores.manifest.metric_variant)
    throw ParameterError("scored run has no metric variant");
  if (auto diff = FirstManifestDifference(scores.manifest, analysis.manifest))
    throw MismatchError("manifest." + *diff,
                        "scores and analysis come from different runs");
  if (scores.scores.prediction_count != analysis.records.size())
    throw MismatchError("prediction_count",
                        std::to_string(scores.scores.prediction_count) +
                            " scored vs " +
                            std::to_string(analysis.records.size()) +
                            " analyzed");

  Json j = Header("run_report");
  j["label"] = RunLabel(scores.manifest);
  j["manifest"] = ToJson(scores.manifest);
  j["metric_notes"] = MetricNotes();
  j["scores"] = ScoresBlock(scores.scores);
  Json a = SummaryBlock(analysis::Summarize(analysis.records));
  a["classifier"] = ClassifierBlock(analysis.classifier);
  j["analysis"] = std::move(a);
  if (reference_row) {
    Json ref = ToJson(*reference_row);
    ref["source"] = "paper_reference";
    j["reference_row"] = std::move(ref);
  }
  j["content_hash"] = ContentHash(j);
  return j;
}

std::string ContentHash(const Json& doc) {
  Json copy = doc;
  if (copy.is_object()) {
    copy.erase("content_hash");
    if (auto it = copy.find("manifest"); it != copy.end() && it->is_object())
      it->erase("timestamp");
  }
  return Sha256Hex(copy.dump());
}

MetricRow RowFromReport(const Json& report) {
  CheckHeader(report, "run_report");
  return MetricRowFromJson(At(report, "scores", "$"),
                           Str(report, "label", "$"));
}

Json RowDeltas(const MetricRow& a, const MetricRow& b) {
  Json j;
  for (std::size_t i = 0; i < std::size(kRowKeys); ++i) {
    const auto& ca = a.*kRowFields[i];
    const auto& cb = b.*kRowFields[i];
    if (ca && cb) j[kRowKeys[i]] = *cb - *ca;
  }
  return j;
}

Json CompareRuns(const Json& a, const Json& b) {
  CheckHeader(a, "run_report");
  CheckHeader(b, "run_report");
  const RunManifest ma = ManifestFromJson(At(a, "manifest", "$"));
  const RunManifest mb = ManifestFromJson(At(b, "manifest", "$"));
  if (!ma.metric_variant || !mb.metric_variant)
    throw SchemaError("manifest.metric_variant", "missing");
  if (auto diff = FirstVariantDifference(*ma.metric_variant, *mb.metric_variant))
    throw MismatchError("metric_variant." + *diff,
                        "runs were scored with different metric choices");

  const MetricRow ra = RowFromReport(a);
  const MetricRow rb = RowFromReport(b);
  Json deltas = RowDeltas(ra, rb);
  const Json& aa = At(a, "analysis", "$");
  const Json& ab = At(b, "analysis", "$");
  for (const char* key :
       {"failure_rate", "identification_ratio", "mean_lcs_copy_len"})
    deltas[key] = Num(ab, key, "analysis") - Num(aa, key, "analysis");

  Json j = Header("comparison");
  j["metric_variant"] = ToJson(*ma.metric_variant);
  j["a"] = ToJson(ra);
  j["b"] = ToJson(rb);
  j["deltas"] = std::move(deltas);
  return j;
}

std::filesystem::path DefaultPaperReferencePath() {
  if (const char* dir = std::getenv("QGEN_DATA_DIR"); dir && *dir)
    return std::filesystem::path(dir) / "paper_reference.json";
  return std::filesystem::path(QGEN_DATA_DIR) / "paper_reference.json";
}

Json LoadPaperReference(const std::filesystem::path& path) {
  const std::string raw = io::ReadFile(path);
  Json j;
  try {
    j = Json::parse(raw);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (Str(j, "label", "$") != "paper_reference")
    throw SchemaError("$.label", "expected 'paper_reference'");
  return j;
}

std::optional<MetricRow> PaperScoreRow(const Json& reference,
                                       dataset::QplMode mode,
                                       dataset::Delimiter delimiter) {
  std::string format(dataset::ToString(mode));
  std::transform(format.begin(), format.end(), format.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  const std::string delim(dataset::ToString(delimiter));
  const Json& rows = At(reference, "finetuning_scores", "$");
  for (const auto& row : rows) {
    if (Str(row, "format", "row") == format &&
        Str(row, "delimiter", "row") == delim)
      return MetricRowFromJson(row, format + "/" + delim);
  }
  return std::nullopt;
}

std::optional<MetricRow> PaperComparisonRow(const Json& reference,
                                            std::string_view model) {
  const Json& rows = At(reference, "answer_aware_comparison", "$");
  for (const auto& row : rows) {
    if (Str(row, "model", "row") == model)
      return MetricRowFromJson(row, std::string(model));
  }
  return std::nullopt;
}

Json CurvesDocument(std::span<const analysis::ReductionCurve> curves,
                    const RunManifest& manifest) {
  Json j = Header("curves");
  j["manifest"] = ToJson(manifest);
  Json list = Json::array();
  for (const auto& c : curves) {
    Json cj;
    cj["paragraph_id"] = c.paragraph_id;
    cj["error"] = c.error ? Json(*c.error) : Json(nullptr);
    Json points = Json::array();
    for (const auto& p : c.points) {
      Json pj;
      pj["sentence_count"] = p.sentence_count;
      for (int n = 0; n < metrics::kMaxOrder; ++n)
        pj["bleu" + std::to_string(n + 1)] = p.bleu[n];
      points.push_back(std::move(pj));
    }
    cj["points"] = std::move(points);
    list.push_back(std::move(cj));
  }
  j["curves"] = std::move(list);
  return j;
}

std::vector<analysis::ReductionCurve> ParseCurvesDocument(const Json& j) {
  CheckHeader(j, "curves");
  const Json& list = At(j, "curves", "$");
  if (!list.is_array()) throw SchemaError("curves", "expected an array");
  std::vector<analysis::ReductionCurve> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = "curves[" + std::to_string(i) + "]";
    const Json& cj = list[i];
    analysis::ReductionCurve c;
    c.paragraph_id = Str(cj, "paragraph_id", p);
    const Json& err = At(cj, "error", p);
    if (err.is_string()) c.error = err.get<std::string>();
    const Json& points = At(cj, "points", p);
    if (!points.is_array()) throw SchemaError(p + ".points", "expected an array");
    for (std::size_t k = 0; k < points.size(); ++k) {
      const std::string pp = p + ".points[" + std::to_string(k) + "]";
      analysis::CurvePoint point;
      point.sentence_count = Integer<int>(points[k], "sentence_count", pp);
      for (int n = 0; n < metrics::kMaxOrder; ++n)
        point.bleu[n] = Num(points[k], "bleu" + std::to_string(n + 1), pp);
      c.points.push_back(point);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t EmitCurveCsv(std::span<const analysis::ReductionCurve> curves,
                         std::ostream& out) {
  for (const auto& c : curves) {
    int previous = 0;
    for (const auto& p : c.points) {
      if (p.sentence_count <= previous)
        throw ParameterError("curve " + c.paragraph_id +
                             " has non-increasing sentence counts");
      previous = p.sentence_count;
    }
  }

  std::size_t rows = 0;
  out << "paragraph_id,sentence_count,bleu1,bleu2,bleu3,bleu4\n";
  struct Sum {
    std::array<double, metrics::kMaxOrder> bleu{};
    std::size_t n = 0;
  };
  std::map<int, Sum> sums;
  for (const auto& c : curves) {
    const std::string id = CsvField(c.paragraph_id);
    for (const auto& p : c.points) {
      out << id << ',' << p.sentence_count;
      Sum& s = sums[p.sentence_count];
      for (int n = 0; n < metrics::kMaxOrder; ++n) {
        out << ',' << Fixed6(p.bleu[n]);
        s.bleu[n] += p.bleu[n];
      }
      ++s.n;
      out << '\n';
      ++rows;
    }
  }
  for (const auto& [count, s] : sums) {
    out << "MEAN," << count;
    for (int n = 0; n < metrics::kMaxOrder; ++n)
      out << ',' << Fixed6(s.bleu[n] / static_cast<double>(s.n));
    out << '\n';
    ++rows;
  }
  return rows;
}

std::size_t EmitCurveCsv(std::span<const analysis::ReductionCurve> curves,
                         const std::filesystem::path& path) {
  std::ostringstream out;
  const std::size_t rows = EmitCurveCsv(curves, out);
  io::WriteFile(path, out.str());
  return rows;
}

}  // namespace qgen::report
