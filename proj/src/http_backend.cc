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

#include "qgen/http_backend.h"

#include <thread>

#include "httplib.h"
#include "qgen/errors.h"

namespace qgen::decode {
namespace {

using Json = nlohmann::json;

const Json& Require(const Json& body, const char* key) {
  if (!body.is_object()) throw ProtocolError("body is not a JSON object");
  auto it = body.find(key);
  if (it == body.end())
    throw ProtocolError(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> StringList(const Json& v, const char* key) {
  if (!v.is_array())
    throw ProtocolError(std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& item : v) {
    if (!item.is_string())
      throw ProtocolError(std::string("field '") + key +
                          "' must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string ErrorText(const httplib::Result& res) {
  std::string text = "HTTP " + std::to_string(res->status);
  try {
    const Json body = Json::parse(res->body);
    if (body.is_object() && body.contains("error") &&
        body["error"].is_string())
      text += ": " + body["error"].get<std::string>();
  } catch (const Json::exception&) {
  }
  return text;
}

}  // namespace

Json ToWire(const CompletionRequest& request) {
  return Json{{"prompt", request.prompt},
              {"temperature", request.temperature},
              {"top_p", request.top_p},
              {"max_new_tokens", request.max_new_tokens},
              {"stop", request.stop},
              {"seed", request.seed}};
}

Json ToWire(const CompletionReply& reply) {
  return Json{{"completion", reply.completion},
              {"tokens", reply.tokens},
              {"finish_reason", reply.finish_reason == FinishReason::kStopSequence
                                    ? "stop"
                                    : "length"}};
}

CompletionRequest ParseWireRequest(const Json& body) {
  CompletionRequest r;
  const Json& prompt = Require(body, "prompt");
  if (!prompt.is_string()) throw ProtocolError("'prompt' must be a string");
  r.prompt = prompt.get<std::string>();

  const Json& t = Require(body, "temperature");
  if (!t.is_number() || !(t.get<double>() > 0.0))
    throw ProtocolError("'temperature' must be a positive number");
  r.temperature = t.get<double>();

  const Json& p = Require(body, "top_p");
  if (!p.is_number() || !(p.get<double>() > 0.0 && p.get<double>() <= 1.0))
    throw ProtocolError("'top_p' must be in (0, 1]");
  r.top_p = p.get<double>();

  const Json& m = Require(body, "max_new_tokens");
  if (!m.is_number_integer() || m.get<long long>() < 1)
    throw ProtocolError("'max_new_tokens' must be a positive integer");
  r.max_new_tokens = m.get<int>();

  r.stop = StringList(Require(body, "stop"), "stop");

  const Json& s = Require(body, "seed");
  if (!s.is_number_integer() ||
      (!s.is_number_unsigned() && s.get<long long>() < 0))
    throw ProtocolError("'seed' must be a non-negative integer");
  r.seed = s.is_number_unsigned() ? s.get<std::uint64_t>()
                                  : static_cast<std::uint64_t>(s.get<long long>());
  return r;
}

CompletionReply ParseWireReply(const Json& body) {
  CompletionReply r;
  const Json& c = Require(body, "completion");
  if (!c.is_string()) throw ProtocolError("'completion' must be a string");
  r.completion = c.get<std::string>();
  r.tokens = StringList(Require(body, "tokens"), "tokens");
  const Json& f = Require(body, "finish_reason");
  if (f == "stop") {
    r.finish_reason = FinishReason::kStopSequence;
  } else if (f == "length") {
    r.finish_reason = FinishReason::kLengthCap;
  } else {
    throw ProtocolError("'finish_reason' must be \"stop\" or \"length\"");
  }
  return r;
}

HttpEndpoint ParseEndpoint(std::string_view url) {
  constexpr std::string_view kScheme = "http://";
  if (url.substr(0, kScheme.size()) != kScheme)
    throw ConfigError("endpoint must start with http://: " + std::string(url));
  url.remove_prefix(kScheme.size());
  HttpEndpoint ep;
  const auto slash = url.find('/');
  std::string_view authority = url.substr(0, slash);
  if (slash != std::string_view::npos) {
    ep.base_path = std::string(url.substr(slash));
    while (!ep.base_path.empty() && ep.base_path.back() == '/')
      ep.base_path.pop_back();
  }
  const auto colon = authority.rfind(':');
  if (colon != std::string_view::npos) {
    try {
      ep.port = std::stoi(std::string(authority.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ConfigError("bad port in endpoint " + std::string(url));
    }
    authority = authority.substr(0, colon);
  }
  if (authority.empty()) throw ConfigError("endpoint has no host");
  ep.host = std::string(authority);
  return ep;
}

HttpBackend::HttpBackend(std::string endpoint, RetryPolicy retry,
                         std::chrono::seconds timeout)
    : url_(std::move(endpoint)),
      endpoint_(ParseEndpoint(url_)),
      retry_(retry),
      timeout_(timeout) {
  if (retry_.max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
}

BackendDescriptor HttpBackend::Descriptor() const {
  return {BackendKind::kHttp, url_, SamplingLocus::kServer};
}

CompletionReply HttpBackend::Complete(const CompletionRequest& request) const {
  const std::string body = ToWire(request).dump();
  const std::string path = endpoint_.base_path + std::string(kGeneratePath);
  auto backoff = retry_.initial_backoff;
  std::string last_error;

  for (int attempt = 1; attempt <= retry_.max_attempts; ++attempt) {
    httplib::Client client(endpoint_.host, endpoint_.port);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    client.set_write_timeout(timeout_);
    auto res = client.Post(path, body, "application/json");
    if (!res) {
      last_error = "transport failure: " + httplib::to_string(res.error());
    } else if (res->status >= 500) {
      last_error = ErrorText(res);
    } else if (res->status >= 400) {
      throw ProtocolError("backend rejected request: " + ErrorText(res));
    } else if (res->status != 200) {
      throw ProtocolError("unexpected " + ErrorText(res));
    } else {
      Json reply;
      try {
        reply = Json::parse(res->body);
      } catch (const Json::parse_error& e) {
        throw ProtocolError(std::string("reply is not JSON: ") + e.what());
      }
      return ParseWireReply(reply);
    }
    if (attempt < retry_.max_attempts) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
  }
  throw TransportError(url_ + ": " + last_error, retry_.max_attempts);
}

}  // namespace qgen::decode
