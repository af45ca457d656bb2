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

#include <gtest/gtest.h>

#include <sstream>

#include "qgen/errors.h"
#include "qgen/hash.h"
#include "test_util.h"

namespace qgen::io {
namespace {

using decode::FinishReason;

PredictionRecord Sample(int i) {
  return {"0:" + std::to_string(i), Sha256Hex("prompt " + std::to_string(i)),
          "Who won \"the\" gameé?", i % 2 ? FinishReason::kLengthCap
                                              : FinishReason::kStopSequence,
          3 + i};
}

TEST(JsonlTest, PredictionLineIsFixedAndRoundTrips) {
  const PredictionRecord r = {"0:1", "ab", "Who?", FinishReason::kStopSequence, 2};
  EXPECT_EQ(ToJsonLine(r),
            R"({"paragraph_id":"0:1","prompt_hash":"ab","generated":"Who?",)"
            R"("finish_reason":"STOP_SEQUENCE","tokens_emitted":2})");
  EXPECT_EQ(ParsePredictionLine(ToJsonLine(r)), r);
  for (int i = 0; i < 5; ++i)
    EXPECT_EQ(ParsePredictionLine(ToJsonLine(Sample(i))), Sample(i));
}

TEST(JsonlTest, MakePredictionRecordHashesThePrompt) {
  const decode::GeneratedQuestion q{"Who?", FinishReason::kLengthCap, 32, "p"};
  const auto r = MakePredictionRecord(q, "ctx [SEP]");
  EXPECT_EQ(r.paragraph_id, "p");
  EXPECT_EQ(r.prompt_hash, Sha256Hex("ctx [SEP]"));
  EXPECT_EQ(r.generated, "Who?");
  EXPECT_EQ(r.finish_reason, FinishReason::kLengthCap);
  EXPECT_EQ(r.tokens_emitted, 32);
}

TEST(JsonlTest, StreamRoundTripSkipsBlankLines) {
  std::vector<PredictionRecord> records;
  for (int i = 0; i < 4; ++i) records.push_back(Sample(i));
  std::stringstream buf;
  WritePredictions(records, buf);
  std::string text = buf.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
  text.insert(0, "\n  \n");
  std::istringstream in(text);
  EXPECT_EQ(ReadPredictions(in), records);
}

TEST(JsonlTest, ErrorsNameTheLine) {
  std::istringstream bad(ToJsonLine(Sample(0)) + "\n{\"paragraph_id\":3}\n");
  try {
    ReadPredictions(bad);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "line 2");
  }
  std::istringstream garbage("not json\n");
  EXPECT_THROW(ReadPredictions(garbage), SchemaError);
  EXPECT_THROW(
      ParsePredictionLine(R"({"paragraph_id":"a","prompt_hash":"b",)"
                          R"("generated":"c","finish_reason":"DONE","tokens_emitted":1})"),
      Error);
}

TEST(JsonlTest, ReferenceRecords) {
  const ReferenceRecord r{"0:0", {"Who?", "What?"}};
  EXPECT_EQ(ToJsonLine(r), R"({"paragraph_id":"0:0","references":["Who?","What?"]})");
  EXPECT_EQ(ParseReferenceLine(ToJsonLine(r)), r);
  EXPECT_THROW(ParseReferenceLine(R"({"paragraph_id":"x","references":[]})"),
               SchemaError);
  EXPECT_THROW(ParseReferenceLine(R"({"paragraph_id":"x","references":"Who?"})"),
               SchemaError);
}

TEST(JsonlTest, FileRoundTripAndIoErrors) {
  testing::TempDir dir;
  const std::vector<ReferenceRecord> refs = {{"a", {"x"}}, {"b", {"y", "z"}}};
  WriteReferences(refs, dir / "refs.jsonl");
  EXPECT_EQ(ReadReferences(dir / "refs.jsonl"), refs);
  std::vector<PredictionRecord> preds = {Sample(1)};
  WritePredictions(preds, dir / "p.jsonl");
  EXPECT_EQ(ReadPredictions(dir / "p.jsonl"), preds);
  EXPECT_THROW(ReadFile(dir / "missing"), IoError);
  EXPECT_THROW(WriteFile(dir / "no" / "such" / "dir" / "f", "x"), IoError);
}

}  // namespace
}  // namespace qgen::io
