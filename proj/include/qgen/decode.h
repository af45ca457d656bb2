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

#ifndef QGEN_DECODE_H_
#define QGEN_DECODE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/backend.h"
#include "qgen/sampling.h"

namespace qgen::decode {

struct GenerationParams {
  double temperature = 0.6;
  double top_p = 0.9;
  int max_new_tokens = 32;  // backend tokens; the stop token is not counted
  std::string stop_text = "\n";
  std::uint64_t rng_seed = 0;

  // Throws ParameterError on t <= 0, p outside (0, 1], max < 1 or empty stop.
  void Validate() const;
};

struct GeneratedQuestion {
  std::string text;  // trimmed, never contains stop_text
  FinishReason finish_reason = FinishReason::kLengthCap;
  int tokens_emitted = 0;
  std::string paragraph_id;
};

// Runs one generation session for prompt. prompt should already end with the
// rendered delimiter. CLIENT-locus backends are sampled here with
// temperature, then nucleus filtering, then an inverse-CDF draw seeded by
// SessionSeed(params.rng_seed, paragraph_id). SERVER-locus backends receive
// the same parameters and seed over the wire.
GeneratedQuestion GenerateQuestion(const Backend& backend,
                                   std::string_view prompt,
                                   const GenerationParams& params,
                                   std::string_view paragraph_id = {});

struct GenerationTask {
  std::string paragraph_id;
  std::string prompt;
};

// Runs independent sessions with at most max_in_flight at a time. Results
// are in task order and do not depend on max_in_flight.
std::vector<GeneratedQuestion> GenerateAll(const Backend& backend,
                                           std::span<const GenerationTask> tasks,
                                           const GenerationParams& params,
                                           int max_in_flight = 4);

}  // namespace qgen::decode

#endif  // QGEN_DECODE_H_
