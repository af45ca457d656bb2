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

#ifndef QGEN_PIPELINE_H_
#define QGEN_PIPELINE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/dataset.h"
#include "qgen/decode.h"
#include "qgen/jsonl.h"

namespace qgen::pipeline {

// One generation prompt with what is needed to score and analyze its output.
struct PromptTask {
  std::string id;       // paragraph id, "<paragraph id>/<question index>"
                        // for answer-aware prompts, "line:<n>" for LM text
  std::string prompt;   // ends with the first delimiter
  std::string context;  // normalized, without answer markup
  std::vector<std::string> references;
};

// Standard formats give one task per paragraph with all of its questions as
// references. Answer-aware formats give one task per question, with the
// answer marked in the prompt.
std::vector<PromptTask> TasksFromDataset(const dataset::QADataset& ds,
                                         const dataset::FormatConfig& cfg);

// One task per non-empty line of formatted LM text. The questions on the
// line become the references.
std::vector<PromptTask> TasksFromLmText(std::string_view text,
                                        const dataset::FormatConfig& cfg);

struct LoadedContexts {
  std::vector<PromptTask> tasks;
  std::string fingerprint;  // SHA-256 hex of the file bytes
  bool from_squad = false;
  std::size_t warnings = 0;
};

// Accepts SQuAD-style JSON or formatted LM text, detected from the first
// non-blank byte.
LoadedContexts LoadContexts(const std::filesystem::path& path,
                            const dataset::FormatConfig& cfg);

std::vector<decode::GenerationTask> GenerationTasks(
    const std::vector<PromptTask>& tasks);

std::vector<io::ReferenceRecord> ReferenceRecords(
    const std::vector<PromptTask>& tasks);

}  // namespace qgen::pipeline

#endif  // QGEN_PIPELINE_H_
