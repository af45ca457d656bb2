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

// End-to-end runs of the qgen binary.

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "qgen/jsonl.h"
#include "test_util.h"

namespace qgen {
namespace {

using Json = nlohmann::json;

struct RunResult {
  int status = -1;
  std::string output;
};

RunResult Qgen(const testing::TempDir& dir, const std::string& args) {
  const auto log = dir / "stdout.txt";
  const std::string cmd = std::string("\"") + QGEN_CLI_PATH + "\" " + args +
                          " > \"" + log.string() + "\" 2>&1";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, io::ReadFile(log)};
}

std::string Q(const std::filesystem::path& p) { return "\"" + p.string() + "\""; }

Json Load(const std::filesystem::path& p) { return Json::parse(io::ReadFile(p)); }

class CliTest : public ::testing::Test {
 protected:
  testing::TempDir dir;
  std::filesystem::path squad = testing::DataPath("super_bowl.json");
};

TEST_F(CliTest, FormatWritesTheGoldenLine) {
  const auto r = Qgen(dir, "format --input " + Q(squad) + " --output " +
                               Q(dir / "lm.txt") + " --qpl oqpl --delim artificial");
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("paragraphs 1"), std::string::npos) << r.output;
  const std::string lm = io::ReadFile(dir / "lm.txt");
  EXPECT_EQ(lm.substr(0, lm.find('\n')),
            testing::ReadGoldenLine("golden_oqpl_artificial.txt"));
}

TEST_F(CliTest, FullPipeline) {
  const std::string common = " --contexts " + Q(squad);
  auto r = Qgen(dir, "generate" + common + " --output " + Q(dir / "pred.jsonl") +
                         " --mock copy --seed 7 --max-in-flight 2");
  ASSERT_EQ(r.status, 0) << r.output;
  const auto preds = io::ReadPredictions(dir / "pred.jsonl");
  ASSERT_EQ(preds.size(), 1u);
  const Json sidecar = Load(dir / "pred.jsonl.manifest.json");
  EXPECT_EQ(sidecar["kind"], "manifest");
  EXPECT_EQ(sidecar["manifest"]["generation"]["rng_seed"], 7);

  // The same seed reproduces the same bytes.
  r = Qgen(dir, "generate" + common + " --output " + Q(dir / "again.jsonl") +
                    " --mock copy --seed 7 --max-in-flight 1");
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(io::ReadFile(dir / "pred.jsonl"), io::ReadFile(dir / "again.jsonl"));

  r = Qgen(dir, "format --input " + Q(squad) + " --output " + Q(dir / "lm.txt") +
                    " --references " + Q(dir / "refs.jsonl"));
  ASSERT_EQ(r.status, 0) << r.output;
  r = Qgen(dir, "evaluate --predictions " + Q(dir / "pred.jsonl") +
                    " --references " + Q(dir / "refs.jsonl") + " --output " +
                    Q(dir / "scores.json"));
  ASSERT_EQ(r.status, 0) << r.output;
  const Json scores = Load(dir / "scores.json");
  EXPECT_EQ(scores["kind"], "scores");
  EXPECT_EQ(scores["scores"]["prediction_count"], 1);

  r = Qgen(dir, "analyze --predictions " + Q(dir / "pred.jsonl") + common +
                    " --output " + Q(dir / "analysis.json"));
  ASSERT_EQ(r.status, 0) << r.output;

  r = Qgen(dir, "report --scores " + Q(dir / "scores.json") + " --analysis " +
                    Q(dir / "analysis.json") + " --out " + Q(dir / "a.json") +
                    " --with-paper-row");
  ASSERT_EQ(r.status, 0) << r.output;
  const Json report = Load(dir / "a.json");
  EXPECT_EQ(report["kind"], "run_report");
  EXPECT_DOUBLE_EQ(report["reference_row"]["bleu1"].get<double>(), 55.60);

  r = Qgen(dir, "report compare --a " + Q(dir / "a.json") + " --b " +
                    Q(dir / "a.json") + " --out " + Q(dir / "cmp.json"));
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_DOUBLE_EQ(Load(dir / "cmp.json")["deltas"]["bleu1"].get<double>(), 0.0);
}

TEST_F(CliTest, AnalyzeRefusesForeignContexts) {
  auto r = Qgen(dir, "generate --contexts " + Q(squad) + " --output " +
                         Q(dir / "pred.jsonl") + " --mock copy");
  ASSERT_EQ(r.status, 0) << r.output;
  io::WriteFile(dir / "other.txt", "Some other context [SEP] Who?\n");
  r = Qgen(dir, "analyze --predictions " + Q(dir / "pred.jsonl") +
                    " --contexts " + Q(dir / "other.txt") + " --output " +
                    Q(dir / "analysis.json"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("error:"), std::string::npos) << r.output;
}

TEST_F(CliTest, ReduceContextAndCurves) {
  auto r = Qgen(dir, "reduce-context --contexts " + Q(squad) + " --output " +
                         Q(dir / "curves.json") + " --mock echo");
  ASSERT_EQ(r.status, 0) << r.output;
  const Json curves = Load(dir / "curves.json");
  ASSERT_EQ(curves["curves"].size(), 1u);
  for (const auto& p : curves["curves"][0]["points"])
    EXPECT_NEAR(p["bleu4"].get<double>(), 100.0, 1e-9);

  r = Qgen(dir, "report curves --in " + Q(dir / "curves.json") + " --out " +
                    Q(dir / "curves.csv"));
  ASSERT_EQ(r.status, 0) << r.output;
  const std::string csv = io::ReadFile(dir / "curves.csv");
  const auto points = curves["curves"][0]["points"].size();
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')),
            1 + 2 * points);
}

TEST_F(CliTest, BadArgumentsFail) {
  EXPECT_NE(Qgen(dir, "format --input " + Q(dir / "missing.json") + " --output " +
                          Q(dir / "x.txt")).status, 0);
  EXPECT_NE(Qgen(dir, "format --input " + Q(squad) + " --output " +
                          Q(dir / "x.txt") + " --qpl aqpl --answer-aware").status, 0);
  EXPECT_NE(Qgen(dir, "generate --contexts " + Q(squad) + " --output " +
                          Q(dir / "p.jsonl") + " --top-p 1.5").status, 0);
  EXPECT_NE(Qgen(dir, "nonsense").status, 0);
}

}  // namespace
}  // namespace qgen
