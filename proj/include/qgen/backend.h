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

#ifndef QGEN_BACKEND_H_
#define QGEN_BACKEND_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/sampling.h"

namespace qgen::decode {

enum class FinishReason { kStopSequence, kLengthCap };

std::string_view ToString(FinishReason reason);  // STOP_SEQUENCE|LENGTH_CAP
FinishReason ParseFinishReason(std::string_view name);

enum class BackendKind { kMock, kHttp };
enum class SamplingLocus { kClient, kServer };

struct BackendDescriptor {
  BackendKind kind = BackendKind::kMock;
  std::string endpoint;  // HTTP only
  SamplingLocus sampling_locus = SamplingLocus::kClient;

  // MOCK implies CLIENT; HTTP needs an endpoint. Throws ConfigError.
  void Validate() const;
};

std::string_view ToString(BackendKind kind);
std::string_view ToString(SamplingLocus locus);
BackendKind ParseBackendKind(std::string_view name);       // mock|http
SamplingLocus ParseSamplingLocus(std::string_view name);   // client|server

// Body of POST /v1/generate.
struct CompletionRequest {
  std::string prompt;
  double temperature = 0.6;
  double top_p = 0.9;
  int max_new_tokens = 32;
  std::vector<std::string> stop{"\n"};
  std::uint64_t seed = 0;
};

struct CompletionReply {
  std::string completion;
  std::vector<std::string> tokens;
  FinishReason finish_reason = FinishReason::kStopSequence;
};

// A language model the generation loop can drive. CLIENT-locus backends
// expose per-step distributions and the loop samples; SERVER-locus backends
// run the whole loop remotely.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual BackendDescriptor Descriptor() const = 0;

  // Distribution over the token following prompt + generated. Must be safe to
  // call concurrently. The default throws ProtocolError.
  virtual TokenDistribution NextToken(
      std::string_view prompt, std::span<const std::string> generated) const;

  // Whole completion, sampled by the backend. The default throws
  // ProtocolError.
  virtual CompletionReply Complete(const CompletionRequest& request) const;
};

}  // namespace qgen::decode

#endif  // QGEN_BACKEND_H_
