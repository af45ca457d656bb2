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

#include "qgen/jsonl.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "qgen/errors.h"
#include "qgen/hash.h"

namespace qgen::io {
namespace {

using Json = nlohmann::ordered_json;

Json ParseObject(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!j.is_object()) throw SchemaError("$", "expected an object");
  return j;
}

const Json& Field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(key, "missing");
  return *it;
}

std::string StringField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_string()) throw SchemaError(key, "expected a string");
  return v.get<std::string>();
}

template <typename Record, typename Parse>
std::vector<Record> ReadLines(std::istream& in, Parse parse) {
  std::vector<Record> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse(line));
    } catch (const Error& e) {
      throw SchemaError("line " + std::to_string(number), e.what());
    }
  }
  return out;
}

std::ifstream OpenIn(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  return in;
}

}  // namespace

PredictionRecord MakePredictionRecord(const decode::GeneratedQuestion& q,
                                      std::string_view prompt) {
  return {q.paragraph_id, Sha256Hex(prompt), q.text, q.finish_reason,
          q.tokens_emitted};
}

std::string ToJsonLine(const PredictionRecord& r) {
  Json j;
  j["paragraph_id"] = r.paragraph_id;
  j["prompt_hash"] = r.prompt_hash;
  j["generated"] = r.generated;
  j["finish_reason"] = std::string(decode::ToString(r.finish_reason));
  j["tokens_emitted"] = r.tokens_emitted;
  return j.dump();
}

PredictionRecord ParsePredictionLine(std::string_view line) {
  const Json j = ParseObject(line);
  PredictionRecord r;
  r.paragraph_id = StringField(j, "paragraph_id");
  r.prompt_hash = StringField(j, "prompt_hash");
  r.generated = StringField(j, "generated");
  r.finish_reason = decode::ParseFinishReason(StringField(j, "finish_reason"));
  const Json& tokens = Field(j, "tokens_emitted");
  if (!tokens.is_number_integer() || tokens.get<long long>() < 0)
    throw SchemaError("tokens_emitted", "expected a non-negative integer");
  r.tokens_emitted = tokens.get<int>();
  return r;
}

void WritePredictions(std::span<const PredictionRecord> records,
                      std::ostream& out) {
  for (const auto& r : records) out << ToJsonLine(r) << '\n';
}

void WritePredictions(std::span<const PredictionRecord> records,
                      const std::filesystem::path& path) {
  std::ostringstream out;
  WritePredictions(records, out);
  WriteFile(path, out.str());
}

std::vector<PredictionRecord> ReadPredictions(std::istream& in) {
  return ReadLines<PredictionRecord>(in, ParsePredictionLine);
}

std::vector<PredictionRecord> ReadPredictions(
    const std::filesystem::path& path) {
  auto in = OpenIn(path);
  return ReadPredictions(in);
}

std::string ToJsonLine(const ReferenceRecord& r) {
  Json j;
  j["paragraph_id"] = r.paragraph_id;
  j["references"] = r.references;
  return j.dump();
}

ReferenceRecord ParseReferenceLine(std::string_view line) {
  const Json j = ParseObject(line);
  ReferenceRecord r;
  r.paragraph_id = StringField(j, "paragraph_id");
  const Json& refs = Field(j, "references");
  if (!refs.is_array() || refs.empty())
    throw SchemaError("references", "expected a non-empty array");
  for (const auto& q : refs) {
    if (!q.is_string()) throw SchemaError("references", "expected strings");
    r.references.push_back(q.get<std::string>());
  }
  return r;
}

void WriteReferences(std::span<const ReferenceRecord> records,
                     std::ostream& out) {
  for (const auto& r : records) out << ToJsonLine(r) << '\n';
}

void WriteReferences(std::span<const ReferenceRecord> records,
                     const std::filesystem::path& path) {
  std::ostringstream out;
  WriteReferences(records, out);
  WriteFile(path, out.str());
}

std::vector<ReferenceRecord> ReadReferences(std::istream& in) {
  return ReadLines<ReferenceRecord>(in, ParseReferenceLine);
}

std::vector<ReferenceRecord> ReadReferences(
    const std::filesystem::path& path) {
  auto in = OpenIn(path);
  return ReadReferences(in);
}

std::string ReadFile(const std::filesystem::path& path) {
  auto in = OpenIn(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace qgen::io
