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

#include "qgen/pipeline.h"

#include "qgen/hash.h"

namespace qgen::pipeline {

std::vector<PromptTask> TasksFromDataset(const dataset::QADataset& ds,
                                         const dataset::FormatConfig& cfg) {
  cfg.Validate();
  std::vector<PromptTask> tasks;
  for (const auto* p : ds.Paragraphs()) {
    const std::string context = dataset::NormalizeText(p->context);
    if (!cfg.answer_aware) {
      PromptTask t{p->id, dataset::RenderPrompt(context, cfg), context, {}};
      for (const auto& qa : p->qas)
        t.references.push_back(dataset::NormalizeText(qa.question));
      tasks.push_back(std::move(t));
      continue;
    }
    for (const auto& ex : dataset::BuildParagraphExamples(*p, cfg)) {
      const int qi = ex.source_question_indices.at(0);
      const auto split = dataset::SplitExampleLine(ex.line, cfg);
      tasks.push_back({p->id + "/" + std::to_string(qi),
                       dataset::RenderPrompt(split.context, cfg), context,
                       {dataset::NormalizeText(p->qas[qi].question)}});
    }
  }
  return tasks;
}

std::vector<PromptTask> TasksFromLmText(std::string_view text,
                                        const dataset::FormatConfig& cfg) {
  cfg.Validate();
  std::vector<PromptTask> tasks;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    auto split = dataset::SplitExampleLine(line, cfg);
    PromptTask t;
    t.id = "line:" + std::to_string(line_no);
    t.prompt = dataset::RenderPrompt(split.context, cfg);
    t.context = split.context;
    t.references = std::move(split.questions);
    tasks.push_back(std::move(t));
  }
  return tasks;
}

LoadedContexts LoadContexts(const std::filesystem::path& path,
                            const dataset::FormatConfig& cfg) {
  const std::string raw = io::ReadFile(path);
  LoadedContexts out;
  out.fingerprint = Sha256Hex(raw);
  const auto first = raw.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && raw[first] == '{') {
    auto parsed = dataset::ParseSquad(raw);
    out.from_squad = true;
    out.warnings = parsed.warnings.size();
    out.tasks = TasksFromDataset(parsed.dataset, cfg);
  } else {
    out.tasks = TasksFromLmText(raw, cfg);
  }
  return out;
}

std::vector<decode::GenerationTask> GenerationTasks(
    const std::vector<PromptTask>& tasks) {
  std::vector<decode::GenerationTask> out;
  out.reserve(tasks.size());
  for (const auto& t : tasks) out.push_back({t.id, t.prompt});
  return out;
}

std::vector<io::ReferenceRecord> ReferenceRecords(
    const std::vector<PromptTask>& tasks) {
  std::vector<io::ReferenceRecord> out;
  out.reserve(tasks.size());
  for (const auto& t : tasks) out.push_back({t.id, t.references});
  return out;
}

}  // namespace qgen::pipeline
