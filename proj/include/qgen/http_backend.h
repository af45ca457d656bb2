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

#ifndef QGEN_HTTP_BACKEND_H_
#define QGEN_HTTP_BACKEND_H_

#include <chrono>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qgen/backend.h"

namespace qgen::decode {

// Wire format of POST /v1/generate:
//   request  {prompt, temperature, top_p, max_new_tokens, stop: [string], seed}
//   reply    {completion, tokens: [string], finish_reason: "stop"|"length"}
//   error    HTTP 4xx/5xx with {error}
inline constexpr std::string_view kGeneratePath = "/v1/generate";

nlohmann::json ToWire(const CompletionRequest& request);
nlohmann::json ToWire(const CompletionReply& reply);

// Strict parsers; ProtocolError names the offending field.
CompletionRequest ParseWireRequest(const nlohmann::json& body);
CompletionReply ParseWireReply(const nlohmann::json& body);

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{250};  // doubles per retry
};

struct HttpEndpoint {
  std::string host;
  int port = 80;
  std::string base_path;  // prefix before /v1/generate, no trailing slash
};

// Accepts "http://host[:port][/prefix]". Throws ConfigError otherwise.
HttpEndpoint ParseEndpoint(std::string_view url);

// SERVER-locus backend speaking the wire format above. Connection failures
// and 5xx replies are retried with exponential backoff; 4xx replies and
// malformed bodies raise ProtocolError immediately.
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(std::string endpoint, RetryPolicy retry = {},
                       std::chrono::seconds timeout = std::chrono::seconds(120));

  BackendDescriptor Descriptor() const override;
  CompletionReply Complete(const CompletionRequest& request) const override;

 private:
  std::string url_;
  HttpEndpoint endpoint_;
  RetryPolicy retry_;
  std::chrono::seconds timeout_;
};

}  // namespace qgen::decode

#endif  // QGEN_HTTP_BACKEND_H_
