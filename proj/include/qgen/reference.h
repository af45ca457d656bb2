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

#ifndef QGEN_REFERENCE_H_
#define QGEN_REFERENCE_H_

#include <span>
#include <string>
#include <vector>

#include "qgen/analysis.h"
#include "qgen/dataset.h"
#include "qgen/metrics.h"

// Single-threaded versions of the parallel kernels. Tests and benchmarks
// compare them against the OpenMP paths; results must be identical.
namespace qgen::reference {

metrics::ScoreReport ScoreCorpusSerial(std::span<const metrics::EvalPair> pairs);

std::vector<dataset::TrainingExample> BuildExamplesSerial(
    const dataset::QADataset& ds, const dataset::FormatConfig& cfg);

double IdentificationRatioSerial(std::span<const std::string> questions,
                                 const analysis::ClassifierConfig& cfg = {});

std::vector<analysis::AnalysisRecord> AnalyzeAllSerial(
    std::span<const analysis::AnalysisInput> inputs,
    const analysis::ClassifierConfig& classifier = {},
    const analysis::RepetitionConfig& repetition = {});

}  // namespace qgen::reference

#endif  // QGEN_REFERENCE_H_
