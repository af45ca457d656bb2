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

#ifndef QGEN_REPORT_H_
#define QGEN_REPORT_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qgen/analysis.h"
#include "qgen/backend.h"
#include "qgen/dataset.h"
#include "qgen/decode.h"
#include "qgen/metrics.h"

namespace qgen::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Everything needed to reproduce a run. metric_variant is set once the
// predictions have been scored.
struct RunManifest {
  dataset::FormatConfig format;
  decode::GenerationParams generation;
  decode::BackendDescriptor backend;
  std::optional<metrics::MetricVariant> metric_variant;
  std::string dataset_fingerprint;  // SHA-256 hex of the input bytes
  std::string timestamp;            // UTC, never hashed or compared
};

Json ToJson(const metrics::MetricVariant& variant);
metrics::MetricVariant MetricVariantFromJson(const Json& j);
Json ToJson(const RunManifest& manifest);
RunManifest ManifestFromJson(const Json& j);  // throws SchemaError

// Dotted name of the first field that differs, ignoring the timestamp and
// the metric variant, or nullopt.
std::optional<std::string> FirstManifestDifference(const RunManifest& a,
                                                   const RunManifest& b);
std::optional<std::string> FirstVariantDifference(
    const metrics::MetricVariant& a, const metrics::MetricVariant& b);

// ISO-8601 UTC. SOURCE_DATE_EPOCH, when set, replaces the clock.
std::string CurrentTimestamp();

// Known differences between these metric implementations and the usual
// external scoring package. Embedded in every scores and run report.
std::vector<std::string> MetricNotes();

struct ScoredRun {
  RunManifest manifest;  // metric_variant set
  metrics::ScoreReport scores;
};

Json ScoresDocument(const ScoredRun& run);
ScoredRun ParseScoresDocument(const Json& j);

struct AnalyzedRun {
  RunManifest manifest;
  analysis::ClassifierConfig classifier;
  std::vector<analysis::AnalysisRecord> records;
};

Json AnalysisDocument(const AnalyzedRun& run);
AnalyzedRun ParseAnalysisDocument(const Json& j);

// One row of a score table. Absent cells stay empty.
struct MetricRow {
  std::string label;
  std::optional<double> bleu1, bleu2, bleu3, bleu4, meteor, rouge_l;
};

Json ToJson(const MetricRow& row);
MetricRow MetricRowFromJson(const Json& j, std::string label = {});

// Run report: the manifest, the six-metric row, failure counts and rate,
// identification ratio, mean copy length and, when given, a transcribed
// reference row. content_hash covers everything except the timestamp.
// Throws ParameterError on an empty analysis and MismatchError when the two
// manifests disagree.
Json Aggregate(const ScoredRun& scores, const AnalyzedRun& analysis,
               const std::optional<MetricRow>& reference_row = {});

// SHA-256 over the canonical dump of doc without content_hash and without
// manifest.timestamp.
std::string ContentHash(const Json& doc);

MetricRow RowFromReport(const Json& report);

// Per-metric b - a for the cells both rows have.
Json RowDeltas(const MetricRow& a, const MetricRow& b);

// Side-by-side comparison of two run reports. Throws MismatchError naming
// the first differing metric choice.
Json CompareRuns(const Json& a, const Json& b);

// The transcribed constants file. Throws IoError or SchemaError.
std::filesystem::path DefaultPaperReferencePath();
Json LoadPaperReference(
    const std::filesystem::path& path = DefaultPaperReferencePath());
// Row of the fine-tuning score table for a format, if transcribed.
std::optional<MetricRow> PaperScoreRow(const Json& reference,
                                       dataset::QplMode mode,
                                       dataset::Delimiter delimiter);
// Row of the answer-aware comparison table by model name.
std::optional<MetricRow> PaperComparisonRow(const Json& reference,
                                            std::string_view model);

Json CurvesDocument(std::span<const analysis::ReductionCurve> curves,
                    const RunManifest& manifest);
std::vector<analysis::ReductionCurve> ParseCurvesDocument(const Json& j);

// Writes paragraph_id,sentence_count,bleu1..bleu4 rows, then one MEAN row per
// distinct sentence count. Returns the number of rows after the header.
// Throws ParameterError on curves whose counts are not strictly increasing.
std::size_t EmitCurveCsv(std::span<const analysis::ReductionCurve> curves,
                         std::ostream& out);
std::size_t EmitCurveCsv(std::span<const analysis::ReductionCurve> curves,
                         const std::filesystem::path& path);

}  // namespace qgen::report

#endif  // QGEN_REPORT_H_
