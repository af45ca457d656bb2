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

// qgen: format SQuAD-style data, generate questions, score and analyze them.

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgen/analysis.h"
#include "qgen/dataset.h"
#include "qgen/decode.h"
#include "qgen/errors.h"
#include "qgen/hash.h"
#include "qgen/http_backend.h"
#include "qgen/jsonl.h"
#include "qgen/metrics.h"
#include "qgen/mock_backend.h"
#include "qgen/pipeline.h"
#include "qgen/report.h"

namespace {

using qgen::report::Json;

struct FormatFlags {
  std::string qpl = "oqpl";
  std::string delim = "artificial";
  bool answer_aware = false;

  void Add(CLI::App* cmd) {
    cmd->add_option("--qpl", qpl, "Questions per line: oqpl or aqpl")
        ->check(CLI::IsMember({"oqpl", "aqpl"}));
    cmd->add_option("--delim", delim, "Delimiter: artificial, question, number")
        ->check(CLI::IsMember({"artificial", "question", "number"}));
    cmd->add_flag("--answer-aware", answer_aware, "Mark the answer span (OQPL)");
  }

  qgen::dataset::FormatConfig Config() const {
    qgen::dataset::FormatConfig cfg;
    cfg.qpl_mode = qgen::dataset::ParseQplMode(qpl);
    cfg.delimiter = qgen::dataset::ParseDelimiter(delim);
    cfg.answer_aware = answer_aware;
    cfg.Validate();
    return cfg;
  }
};

struct BackendFlags {
  std::string kind = "mock";
  std::string mock = "copy";
  std::string endpoint;
  double temperature = 0.6;
  double top_p = 0.9;
  int max_tokens = 32;
  std::uint64_t seed = 0;
  int max_in_flight = 4;

  void Add(CLI::App* cmd) {
    cmd->add_option("--backend", kind, "mock or http")
        ->check(CLI::IsMember({"mock", "http"}));
    cmd->add_option("--endpoint", endpoint, "http://host:port for --backend http");
    cmd->add_option("--temperature", temperature);
    cmd->add_option("--top-p", top_p);
    cmd->add_option("--max-tokens", max_tokens);
    cmd->add_option("--seed", seed);
    cmd->add_option("--max-in-flight", max_in_flight, "Concurrent sessions")
        ->check(CLI::PositiveNumber);
  }

  qgen::decode::GenerationParams Params() const {
    qgen::decode::GenerationParams p;
    p.temperature = temperature;
    p.top_p = top_p;
    p.max_new_tokens = max_tokens;
    p.rng_seed = seed;
    p.Validate();
    return p;
  }

  std::unique_ptr<qgen::decode::Backend> Make() const {
    if (kind == "http") {
      if (endpoint.empty()) throw qgen::ConfigError("--endpoint is required");
      return std::make_unique<qgen::decode::HttpBackend>(endpoint);
    }
    if (mock != "copy") throw qgen::ConfigError("unknown mock '" + mock + "'");
    return std::make_unique<qgen::decode::CopyBackend>();
  }
};

Json ReadJson(const std::string& path) {
  const std::string raw = qgen::io::ReadFile(path);
  try {
    return Json::parse(raw);
  } catch (const Json::parse_error& e) {
    throw qgen::ParseError(path + ": " + e.what(), e.byte);
  }
}

void WriteJson(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  qgen::io::WriteFile(path, j.dump(2) + "\n");
}

std::string SidecarPath(const std::string& predictions) {
  return predictions + ".manifest.json";
}

qgen::report::RunManifest ReadManifest(const std::string& path) {
  const Json j = ReadJson(path);
  if (!j.is_object() || j.value("kind", "") != "manifest")
    throw qgen::SchemaError(path, "not a manifest file");
  return qgen::report::ManifestFromJson(j.at("manifest"));
}

// ---- format ----------------------------------------------------------------

struct FormatCmd {
  std::string input, output, references;
  FormatFlags fmt;

  void Run() const {
    const auto cfg = fmt.Config();
    auto parsed = qgen::dataset::LoadSquadFile(input);
    for (const auto& w : parsed.warnings)
      std::cerr << "warning: " << w.paragraph_id
                << (w.question_index >= 0
                        ? " q" + std::to_string(w.question_index)
                        : std::string())
                << ": " << w.reason << '\n';
    const auto examples = qgen::dataset::BuildExamples(parsed.dataset, cfg);
    qgen::dataset::EmitLmText(examples, output);
    if (!references.empty())
      qgen::io::WriteReferences(
          qgen::pipeline::ReferenceRecords(
              qgen::pipeline::TasksFromDataset(parsed.dataset, cfg)),
          references);
    std::cout << "paragraphs " << parsed.dataset.ParagraphCount()
              << "\nquestions " << parsed.dataset.QuestionCount() << "\nlines "
              << examples.size() << "\nwarnings " << parsed.warnings.size()
              << '\n';
  }
};

// ---- generate --------------------------------------------------------------

struct GenerateCmd {
  std::string contexts, output;
  std::size_t limit = 0;
  FormatFlags fmt;
  BackendFlags backend;

  void Run() const {
    const auto cfg = fmt.Config();
    const auto params = backend.Params();
    auto loaded = qgen::pipeline::LoadContexts(contexts, cfg);
    if (limit > 0 && loaded.tasks.size() > limit) loaded.tasks.resize(limit);
    const auto be = backend.Make();

    const auto gen_tasks = qgen::pipeline::GenerationTasks(loaded.tasks);
    const auto generated =
        qgen::decode::GenerateAll(*be, gen_tasks, params, backend.max_in_flight);
    std::vector<qgen::io::PredictionRecord> records;
    records.reserve(generated.size());
    for (std::size_t i = 0; i < generated.size(); ++i)
      records.push_back(
          qgen::io::MakePredictionRecord(generated[i], gen_tasks[i].prompt));
    qgen::io::WritePredictions(records, output);

    qgen::report::RunManifest m;
    m.format = cfg;
    m.generation = params;
    m.backend = be->Descriptor();
    m.dataset_fingerprint = loaded.fingerprint;
    m.timestamp = qgen::report::CurrentTimestamp();
    Json side;
    side["schema_version"] = qgen::report::kSchemaVersion;
    side["kind"] = "manifest";
    side["manifest"] = qgen::report::ToJson(m);
    WriteJson(SidecarPath(output), side);

    std::size_t capped = 0;
    for (const auto& g : generated)
      capped += g.finish_reason == qgen::decode::FinishReason::kLengthCap;
    std::cout << "generated " << generated.size() << "\nlength_cap " << capped
              << '\n';
  }
};

// ---- evaluate --------------------------------------------------------------

struct EvaluateCmd {
  std::string predictions, references, manifest, output;
  bool multi_reference = false;

  void Run() const {
    const auto preds = qgen::io::ReadPredictions(predictions);
    const auto refs = qgen::io::ReadReferences(references);
    std::map<std::string, const qgen::io::ReferenceRecord*> by_id;
    for (const auto& r : refs) by_id[r.paragraph_id] = &r;

    std::vector<qgen::metrics::EvalPair> pairs;
    pairs.reserve(preds.size());
    for (const auto& p : preds) {
      auto it = by_id.find(p.paragraph_id);
      if (it == by_id.end())
        throw qgen::MismatchError(p.paragraph_id, "no reference questions");
      qgen::metrics::EvalPair pair;
      pair.prediction = qgen::metrics::TokenizeEval(p.generated);
      const auto& qs = it->second->references;
      for (std::size_t k = 0; k < (multi_reference ? qs.size() : 1); ++k)
        pair.references.push_back(qgen::metrics::TokenizeEval(qs[k]));
      pairs.push_back(std::move(pair));
    }

    qgen::report::ScoredRun run;
    run.manifest =
        ReadManifest(manifest.empty() ? SidecarPath(predictions) : manifest);
    qgen::metrics::MetricVariant variant;
    variant.multi_reference = multi_reference;
    run.manifest.metric_variant = variant;
    run.scores = qgen::metrics::ScoreCorpus(pairs);
    WriteJson(output, qgen::report::ScoresDocument(run));
    const auto& s = run.scores;
    std::printf("bleu1 %.2f bleu2 %.2f bleu3 %.2f bleu4 %.2f meteor %.2f "
                "rouge_l %.2f n %zu\n",
                s.bleu[0], s.bleu[1], s.bleu[2], s.bleu[3], s.meteor,
                s.rouge_l, s.prediction_count);
  }
};

// ---- analyze ---------------------------------------------------------------

struct AnalyzeCmd {
  std::string predictions, contexts, manifest, output;
  int window = 2;
  std::vector<std::string> identification = {"WHO", "WHAT", "WHEN", "WHERE"};

  void Run() const {
    const auto preds = qgen::io::ReadPredictions(predictions);
    qgen::report::AnalyzedRun run;
    run.manifest =
        ReadManifest(manifest.empty() ? SidecarPath(predictions) : manifest);
    run.manifest.metric_variant.reset();
    const auto loaded = qgen::pipeline::LoadContexts(contexts, run.manifest.format);
    if (loaded.fingerprint != run.manifest.dataset_fingerprint)
      throw qgen::MismatchError("dataset_fingerprint",
                                "contexts differ from the generation input");
    std::map<std::string, const std::string*> context_by_id;
    for (const auto& t : loaded.tasks) context_by_id[t.id] = &t.context;

    run.classifier.window = window;
    run.classifier.identification.clear();
    for (const auto& name : identification)
      run.classifier.identification.insert(qgen::analysis::ParseQuestionType(name));

    std::vector<qgen::analysis::AnalysisInput> inputs;
    inputs.reserve(preds.size());
    for (const auto& p : preds) {
      auto it = context_by_id.find(p.paragraph_id);
      if (it == context_by_id.end())
        throw qgen::MismatchError(p.paragraph_id, "no such context");
      qgen::analysis::AnalysisInput in;
      in.generated = {p.generated, p.finish_reason, p.tokens_emitted,
                      p.paragraph_id};
      in.context = *it->second;
      inputs.push_back(std::move(in));
    }
    run.records = qgen::analysis::AnalyzeAll(inputs, run.classifier);
    WriteJson(output, qgen::report::AnalysisDocument(run));
    const auto s = qgen::analysis::Summarize(run.records);
    std::printf("count %zu identification %.4f mean_lcs %.3f failure_rate "
                "%.5f\n",
                s.count, s.identification_ratio, s.mean_lcs_copy_len,
                s.failure_rate());
  }
};

// ---- reduce-context --------------------------------------------------------

struct ReduceCmd {
  std::string contexts, output;
  int min_sentences = 2;
  int max_sentences = qgen::analysis::kMaxReductionSentences;
  std::size_t limit = 0;
  FormatFlags fmt;
  BackendFlags backend;

  void Run() const {
    const auto cfg = fmt.Config();
    const auto params = backend.Params();
    const std::string raw = qgen::io::ReadFile(contexts);
    const auto parsed = qgen::dataset::ParseSquad(raw);
    auto paragraphs = parsed.dataset.Paragraphs();
    if (limit > 0 && paragraphs.size() > limit) paragraphs.resize(limit);
    const qgen::analysis::ReductionBounds bounds{min_sentences, max_sentences};

    std::vector<qgen::analysis::ReductionCurve> curves;
    qgen::decode::BackendDescriptor descriptor;
    if (backend.kind == "mock" && backend.mock == "echo") {
      // Each paragraph gets a backend that repeats its first question.
      for (const auto* p : paragraphs) {
        const qgen::decode::EchoBackend echo(p->qas.front().question);
        const qgen::dataset::ContextParagraph* one[] = {p};
        auto c = qgen::analysis::RunReductionExperiments(one, echo, params, cfg,
                                                         bounds, 1);
        for (auto& curve : c) curves.push_back(std::move(curve));
        descriptor = echo.Descriptor();
      }
    } else {
      const auto be = backend.Make();
      descriptor = be->Descriptor();
      curves = qgen::analysis::RunReductionExperiments(
          paragraphs, *be, params, cfg, bounds, backend.max_in_flight);
    }

    qgen::report::RunManifest m;
    m.format = cfg;
    m.generation = params;
    m.backend = descriptor;
    m.dataset_fingerprint = qgen::Sha256Hex(raw);
    m.timestamp = qgen::report::CurrentTimestamp();
    WriteJson(output, qgen::report::CurvesDocument(curves, m));
    std::size_t failed = 0;
    for (const auto& c : curves) failed += c.error.has_value();
    std::cout << "curves " << curves.size() << "\nfailed " << failed << '\n';
  }
};

// ---- report ----------------------------------------------------------------

struct ReportCmd {
  std::string scores, analysis, out;
  bool with_paper_row = false;
  std::string compare_a, compare_b, compare_out;
  std::string curves_in, curves_out;

  void RunAggregate() const {
    const auto scored = qgen::report::ParseScoresDocument(ReadJson(scores));
    const auto analyzed = qgen::report::ParseAnalysisDocument(ReadJson(analysis));
    std::optional<qgen::report::MetricRow> row;
    if (with_paper_row) {
      row = qgen::report::PaperScoreRow(qgen::report::LoadPaperReference(),
                                        scored.manifest.format.qpl_mode,
                                        scored.manifest.format.delimiter);
    }
    WriteJson(out, qgen::report::Aggregate(scored, analyzed, row));
  }

  void RunCompare() const {
    WriteJson(compare_out,
              qgen::report::CompareRuns(ReadJson(compare_a), ReadJson(compare_b)));
  }

  void RunCurves() const {
    const auto curves = qgen::report::ParseCurvesDocument(ReadJson(curves_in));
    const auto rows = qgen::report::EmitCurveCsv(curves, curves_out);
    std::cout << "rows " << rows << '\n';
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Question generation data, decoding and evaluation tools"};
  app.require_subcommand(1);

  FormatCmd format;
  auto* fmt = app.add_subcommand("format", "Render SQuAD JSON as LM text");
  fmt->add_option("--input", format.input, "SQuAD-style JSON")->required();
  fmt->add_option("--output", format.output, "LM text output")->required();
  fmt->add_option("--references", format.references,
                  "Also write reference questions as JSONL");
  format.fmt.Add(fmt);

  GenerateCmd generate;
  auto* gen = app.add_subcommand("generate", "Generate one question per prompt");
  gen->add_option("--contexts", generate.contexts, "SQuAD JSON or LM text")
      ->required();
  gen->add_option("--output", generate.output, "Predictions JSONL")->required();
  gen->add_option("--limit", generate.limit, "Use only the first N prompts");
  generate.fmt.Add(gen);
  generate.backend.Add(gen);
  gen->add_option("--mock", generate.backend.mock, "Mock model: copy");

  EvaluateCmd evaluate;
  auto* ev = app.add_subcommand("evaluate", "Score predictions");
  ev->add_option("--predictions", evaluate.predictions)->required();
  ev->add_option("--references", evaluate.references)->required();
  ev->add_option("--manifest", evaluate.manifest,
                 "Defaults to <predictions>.manifest.json");
  ev->add_option("--output", evaluate.output, "scores.json, - for stdout")
      ->required();
  ev->add_flag("--multi-reference", evaluate.multi_reference,
               "Score against every reference question");

  AnalyzeCmd analyze;
  auto* an = app.add_subcommand("analyze", "Question types, copying, failures");
  an->add_option("--predictions", analyze.predictions)->required();
  an->add_option("--contexts", analyze.contexts)->required();
  an->add_option("--manifest", analyze.manifest,
                 "Defaults to <predictions>.manifest.json");
  an->add_option("--output", analyze.output)->required();
  an->add_option("--window", analyze.window,
                 "Leading tokens searched for a question word, 0 for all");
  an->add_option("--identification", analyze.identification,
                 "Question types counted as identification");

  ReduceCmd reduce;
  auto* rc = app.add_subcommand("reduce-context",
                                "BLEU as context sentences are removed");
  rc->add_option("--contexts", reduce.contexts, "SQuAD JSON")->required();
  rc->add_option("--output", reduce.output, "curves.json")->required();
  rc->add_option("--min-sentences", reduce.min_sentences);
  rc->add_option("--max-sentences", reduce.max_sentences);
  rc->add_option("--limit", reduce.limit, "Use only the first N paragraphs");
  reduce.fmt.Add(rc);
  reduce.backend.Add(rc);
  rc->add_option("--mock", reduce.backend.mock, "Mock model: copy or echo")
      ->check(CLI::IsMember({"copy", "echo"}));

  ReportCmd report;
  auto* rep = app.add_subcommand("report", "Aggregate, compare, export curves");
  rep->require_subcommand(0, 1);
  auto* scores_opt = rep->add_option("--scores", report.scores);
  auto* analysis_opt = rep->add_option("--analysis", report.analysis);
  rep->add_option("--out", report.out, "report.json, - for stdout");
  rep->add_flag("--with-paper-row", report.with_paper_row,
                "Attach the matching transcribed reference row");
  auto* cmp = rep->add_subcommand("compare", "Per-metric deltas b - a");
  cmp->add_option("--a", report.compare_a)->required();
  cmp->add_option("--b", report.compare_b)->required();
  cmp->add_option("--out", report.compare_out, "Defaults to stdout");
  auto* cur = rep->add_subcommand("curves", "Curve JSON to CSV");
  cur->add_option("--in", report.curves_in)->required();
  cur->add_option("--out", report.curves_out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fmt) format.Run();
    if (*gen) generate.Run();
    if (*ev) evaluate.Run();
    if (*an) analyze.Run();
    if (*rc) reduce.Run();
    if (*rep) {
      if (*cmp) {
        report.RunCompare();
      } else if (*cur) {
        report.RunCurves();
      } else {
        if (!*scores_opt || !*analysis_opt)
          throw qgen::ConfigError("report needs --scores and --analysis");
        report.RunAggregate();
      }
    }
  } catch (const qgen::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
