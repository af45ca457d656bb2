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

#include <gtest/gtest.h>

#include <string>

#include "qgen/analysis.h"
#include "qgen/errors.h"
#include "qgen/mock_backend.h"

namespace qgen::analysis {
namespace {

using dataset::ContextParagraph;
using dataset::FormatConfig;

ContextParagraph Paragraph(std::string id, std::string context,
                           std::vector<std::string> questions) {
  ContextParagraph p;
  p.id = std::move(id);
  p.context = std::move(context);
  for (auto& q : questions) p.qas.push_back({"", std::move(q), {}});
  return p;
}

const ContextParagraph& Rhine() {
  static const ContextParagraph p = Paragraph(
      "0:0",
      "The Rhine rises in the Alps. It flows north through Basel. Then it "
      "turns west near Mainz. It reaches the sea in the Netherlands.",
      {"Where does the Rhine rise?", "Which city does the Rhine pass?"});
  return p;
}

// Server-side backend that fails once the prompt drops below min_bytes.
class ShrinkingFailureBackend : public decode::Backend {
 public:
  explicit ShrinkingFailureBackend(std::size_t min_bytes) : min_(min_bytes) {}
  decode::BackendDescriptor Descriptor() const override {
    return {decode::BackendKind::kHttp, "http://stub",
            decode::SamplingLocus::kServer};
  }
  decode::CompletionReply Complete(
      const decode::CompletionRequest& request) const override {
    if (request.prompt.size() < min_)
      throw TransportError("connection refused", 3);
    return {"Where does the Rhine rise?", {"Where", " does", " the", " Rhine",
                                           " rise", "?", "\n"},
            decode::FinishReason::kStopSequence};
  }

 private:
  std::size_t min_;
};

TEST(ReductionTest, EchoOfAReferenceIsFlatAtOneHundred) {
  const decode::EchoBackend echo(Rhine().qas[0].question);
  const auto curve = SentenceReductionExperiment(Rhine(), echo, {}, {});
  EXPECT_EQ(curve.paragraph_id, "0:0");
  EXPECT_FALSE(curve.error.has_value());
  ASSERT_EQ(curve.points.size(), 4u);
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(curve.points[k].sentence_count, k + 1);
    for (double b : curve.points[k].bleu) EXPECT_NEAR(b, 100.0, 1e-9);
  }
}

TEST(ReductionTest, SingleSentenceGivesOnePoint) {
  const auto p = Paragraph("1:0", "Only one sentence here", {"What is here?"});
  const decode::EchoBackend echo("What is here?");
  const auto curve = SentenceReductionExperiment(p, echo, {}, {});
  ASSERT_EQ(curve.points.size(), 1u);
  EXPECT_EQ(curve.points[0].sentence_count, 1);
}

TEST(ReductionTest, DeterministicWithTheCopyBackend) {
  const decode::CopyBackend copy;
  decode::GenerationParams params;
  params.rng_seed = 99;
  const auto a = SentenceReductionExperiment(Rhine(), copy, params, {});
  const auto b = SentenceReductionExperiment(Rhine(), copy, params, {});
  ASSERT_EQ(a.points.size(), 4u);
  ASSERT_EQ(b.points.size(), a.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].sentence_count, b.points[i].sentence_count);
    EXPECT_EQ(a.points[i].bleu, b.points[i].bleu);
    for (double v : a.points[i].bleu) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 100.0);
    }
  }
}

TEST(ReductionTest, TransportFailureKeepsThePartialCurve) {
  // Two sentences plus " [SEP]" is 64 bytes; three is well over 80.
  const ShrinkingFailureBackend backend(80);
  const auto curve = SentenceReductionExperiment(Rhine(), backend, {}, {});
  ASSERT_TRUE(curve.error.has_value());
  EXPECT_NE(curve.error->find("connection refused"), std::string::npos);
  ASSERT_EQ(curve.points.size(), 2u);
  EXPECT_EQ(curve.points[0].sentence_count, 3);
  EXPECT_EQ(curve.points[1].sentence_count, 4);
  EXPECT_NEAR(curve.points[1].bleu[3], 100.0, 1e-9);
}

TEST(ReductionTest, RejectsBadInput) {
  const decode::EchoBackend echo("What?");
  FormatConfig aware;
  aware.answer_aware = true;
  EXPECT_THROW(SentenceReductionExperiment(Rhine(), echo, {}, aware),
               ConfigError);

  std::string long_context;
  for (int i = 0; i < 31; ++i) long_context += "Sentence number " + std::to_string(i) + " ends. ";
  const auto p = Paragraph("2:0", long_context, {"What?"});
  EXPECT_THROW(SentenceReductionExperiment(p, echo, {}, {}), ParameterError);
  EXPECT_EQ(SentenceReductionExperiment(p, echo, {}, {}, 40).points.size(), 31u);

  const auto empty = Paragraph("3:0", "   ", {"What?"});
  EXPECT_THROW(SentenceReductionExperiment(empty, echo, {}, {}), ParameterError);

  decode::GenerationParams bad;
  bad.top_p = 0.0;
  EXPECT_THROW(SentenceReductionExperiment(Rhine(), echo, bad, {}),
               ParameterError);
}

TEST(ReductionTest, BatchFiltersBySentenceCount) {
  const auto one = Paragraph("1:0", "Only one sentence.", {"What?"});
  const std::vector<const ContextParagraph*> all = {&Rhine(), &one};
  const decode::EchoBackend echo("Where does the Rhine rise?");
  const auto curves = RunReductionExperiments(all, echo, {}, {}, {2, 30}, 3);
  ASSERT_EQ(curves.size(), 1u);
  EXPECT_EQ(curves[0].paragraph_id, "0:0");
  EXPECT_EQ(RunReductionExperiments(all, echo, {}, {}, {1, 30}, 1).size(), 2u);
  EXPECT_THROW(RunReductionExperiments(all, echo, {}, {}, {3, 2}, 1),
               ParameterError);
  EXPECT_THROW(RunReductionExperiments(all, echo, {}, {}, {1, 30}, 0),
               ParameterError);
}

}  // namespace
}  // namespace qgen::analysis
