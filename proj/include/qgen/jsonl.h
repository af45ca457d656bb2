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

#ifndef QGEN_JSONL_H_
#define QGEN_JSONL_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/backend.h"
#include "qgen/decode.h"

namespace qgen::io {

// One line of generate output.
struct PredictionRecord {
  std::string paragraph_id;
  std::string prompt_hash;  // SHA-256 hex of the prompt bytes
  std::string generated;
  decode::FinishReason finish_reason = decode::FinishReason::kLengthCap;
  int tokens_emitted = 0;

  bool operator==(const PredictionRecord&) const = default;
};

PredictionRecord MakePredictionRecord(const decode::GeneratedQuestion& q,
                                      std::string_view prompt);

// Keys are written in declaration order, so equal records give equal bytes.
std::string ToJsonLine(const PredictionRecord& record);
PredictionRecord ParsePredictionLine(std::string_view line);

void WritePredictions(std::span<const PredictionRecord> records,
                      std::ostream& out);
void WritePredictions(std::span<const PredictionRecord> records,
                      const std::filesystem::path& path);
// Blank lines are skipped. Errors name the 1-based line number.
std::vector<PredictionRecord> ReadPredictions(std::istream& in);
std::vector<PredictionRecord> ReadPredictions(const std::filesystem::path& path);

// Reference questions for one paragraph.
struct ReferenceRecord {
  std::string paragraph_id;
  std::vector<std::string> references;

  bool operator==(const ReferenceRecord&) const = default;
};

std::string ToJsonLine(const ReferenceRecord& record);
ReferenceRecord ParseReferenceLine(std::string_view line);

void WriteReferences(std::span<const ReferenceRecord> records,
                     std::ostream& out);
void WriteReferences(std::span<const ReferenceRecord> records,
                     const std::filesystem::path& path);
std::vector<ReferenceRecord> ReadReferences(std::istream& in);
std::vector<ReferenceRecord> ReadReferences(const std::filesystem::path& path);

// Reads a whole file. Throws IoError.
std::string ReadFile(const std::filesystem::path& path);
// Writes data to path, replacing it. Throws IoError.
void WriteFile(const std::filesystem::path& path, std::string_view data);

}  // namespace qgen::io

#endif  // QGEN_JSONL_H_
