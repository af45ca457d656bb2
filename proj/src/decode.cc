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

#include "qgen/decode.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <unordered_set>

#include "qgen/errors.h"
#include "qgen/hash.h"

namespace qgen::decode {

void TokenDistribution::Validate() const {
  std::unordered_set<std::string_view> seen;
  double sum = 0.0;
  for (const auto& e : entries) {
    if (!seen.insert(e.token).second)
      throw ParameterError("duplicate token '" + e.token + "' in distribution");
    if (kind == WeightKind::kLogits) {
      if (!std::isfinite(e.weight))
        throw ParameterError("non-finite logit for token '" + e.token + "'");
    } else {
      if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
        throw ParameterError("invalid probability for token '" + e.token + "'");
      sum += e.weight;
    }
  }
  if (kind == WeightKind::kProbabilities && !entries.empty() &&
      std::abs(sum - 1.0) > kProbabilityTolerance)
    throw ParameterError("probabilities sum to " + std::to_string(sum));
}

double TokenDistribution::Weight(std::string_view token) const {
  for (const auto& e : entries)
    if (e.token == token) return e.weight;
  return 0.0;
}

TokenDistribution ApplyTemperature(const TokenDistribution& dist,
                                   double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw ParameterError("temperature must be > 0");
  dist.Validate();

  const bool from_probs = dist.kind == WeightKind::kProbabilities;
  std::vector<double> scaled(dist.entries.size());
  double max_scaled = -INFINITY;
  for (std::size_t i = 0; i < dist.entries.size(); ++i) {
    const double w = dist.entries[i].weight;
    scaled[i] = (from_probs ? (w > 0.0 ? std::log(w) : -INFINITY) : w) /
                temperature;
    max_scaled = std::max(max_scaled, scaled[i]);
  }

  TokenDistribution out;
  out.kind = WeightKind::kProbabilities;
  out.entries.reserve(dist.entries.size());
  double z = 0.0;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    const double e = std::exp(scaled[i] - max_scaled);
    z += e;
    out.entries.push_back({dist.entries[i].token, e});
  }
  for (auto& e : out.entries) e.weight /= z;
  return out;
}

TokenDistribution NucleusFilter(const TokenDistribution& probs, double top_p) {
  if (!(top_p > 0.0 && top_p <= 1.0))
    throw ParameterError("top_p must be in (0, 1]");
  if (probs.kind != WeightKind::kProbabilities)
    throw ParameterError("nucleus filtering needs probabilities");
  probs.Validate();
  if (top_p == 1.0) return probs;

  std::vector<std::size_t> order(probs.entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ea = probs.entries[a];
    const auto& eb = probs.entries[b];
    if (ea.weight != eb.weight) return ea.weight > eb.weight;
    return ea.token < eb.token;
  });

  TokenDistribution out;
  out.kind = WeightKind::kProbabilities;
  double mass = 0.0;
  for (std::size_t idx : order) {
    out.entries.push_back(probs.entries[idx]);
    mass += probs.entries[idx].weight;
    if (mass >= top_p - kNucleusSlack) break;
  }
  for (auto& e : out.entries) e.weight /= mass;
  return out;
}

double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

const std::string& SampleToken(const TokenDistribution& probs, Rng& rng) {
  if (probs.entries.empty())
    throw ParameterError("cannot sample from an empty distribution");
  const double u = UniformUnit(rng);
  double cumulative = 0.0;
  const TokenWeight* last_positive = nullptr;
  for (const auto& e : probs.entries) {
    if (e.weight <= 0.0) continue;
    last_positive = &e;
    cumulative += e.weight;
    if (u < cumulative) return e.token;
  }
  // Rounding left the cumulative sum just under one.
  if (last_positive == nullptr)
    throw ParameterError("distribution has no positive mass");
  return last_positive->token;
}

std::uint64_t SessionSeed(std::uint64_t seed, std::string_view paragraph_id) {
  return seed ^ Hash64(paragraph_id);
}

// --- backend plumbing -------------------------------------------------------

std::string_view ToString(FinishReason reason) {
  return reason == FinishReason::kStopSequence ? "STOP_SEQUENCE" : "LENGTH_CAP";
}

FinishReason ParseFinishReason(std::string_view name) {
  if (name == "STOP_SEQUENCE") return FinishReason::kStopSequence;
  if (name == "LENGTH_CAP") return FinishReason::kLengthCap;
  throw ParameterError("unknown finish reason '" + std::string(name) + "'");
}

std::string_view ToString(BackendKind kind) {
  return kind == BackendKind::kMock ? "mock" : "http";
}

std::string_view ToString(SamplingLocus locus) {
  return locus == SamplingLocus::kClient ? "client" : "server";
}

BackendKind ParseBackendKind(std::string_view name) {
  if (name == "mock") return BackendKind::kMock;
  if (name == "http") return BackendKind::kHttp;
  throw ParameterError("unknown backend kind '" + std::string(name) + "'");
}

SamplingLocus ParseSamplingLocus(std::string_view name) {
  if (name == "client") return SamplingLocus::kClient;
  if (name == "server") return SamplingLocus::kServer;
  throw ParameterError("unknown sampling locus '" + std::string(name) + "'");
}

void BackendDescriptor::Validate() const {
  if (kind == BackendKind::kMock && sampling_locus != SamplingLocus::kClient)
    throw ConfigError("mock backends sample on the client");
  if (kind == BackendKind::kHttp && endpoint.empty())
    throw ConfigError("http backend needs an endpoint");
}

TokenDistribution Backend::NextToken(std::string_view,
                                     std::span<const std::string>) const {
  throw ProtocolError("backend does not expose next-token distributions");
}

CompletionReply Backend::Complete(const CompletionRequest&) const {
  throw ProtocolError("backend does not run server-side completion");
}

// --- generation loop --------------------------------------------------------

void GenerationParams::Validate() const {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw ParameterError("temperature must be > 0");
  if (!(top_p > 0.0 && top_p <= 1.0))
    throw ParameterError("top_p must be in (0, 1]");
  if (max_new_tokens < 1) throw ParameterError("max_new_tokens must be >= 1");
  if (stop_text.empty()) throw ParameterError("stop_text must be non-empty");
}

namespace {

// Appends tokens until the stop text shows up, possibly straddling tokens.
// A token counts as emitted only if some of it lands before the stop text.
class StopScanner {
 public:
  explicit StopScanner(std::string_view stop) : stop_(stop) {}

  bool Feed(std::string_view token) {
    const std::size_t before = text_.size();
    starts_.push_back(before);
    text_.append(token);
    const std::size_t from =
        before >= stop_.size() - 1 ? before - (stop_.size() - 1) : 0;
    const auto pos = text_.find(stop_, from);
    if (pos == std::string::npos) return false;
    // Drop tokens that lie wholly inside the stop text or after it.
    while (!starts_.empty() && starts_.back() >= pos) starts_.pop_back();
    text_.resize(pos);
    return true;
  }

  const std::string& text() const { return text_; }
  int tokens() const { return static_cast<int>(starts_.size()); }

 private:
  std::string_view stop_;
  std::string text_;
  std::vector<std::size_t> starts_;  // offset of each token in text_
};

std::string Trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kSpace);
  return std::string(s.substr(b, e - b + 1));
}

GeneratedQuestion GenerateClientSide(const Backend& backend,
                                     std::string_view prompt,
                                     const GenerationParams& params,
                                     std::uint64_t seed) {
  Rng rng(seed);
  StopScanner scanner(params.stop_text);
  std::vector<std::string> generated;
  generated.reserve(params.max_new_tokens);
  GeneratedQuestion out;
  out.finish_reason = FinishReason::kLengthCap;
  for (int step = 0; step < params.max_new_tokens; ++step) {
    const TokenDistribution raw = backend.NextToken(prompt, generated);
    const TokenDistribution probs =
        NucleusFilter(ApplyTemperature(raw, params.temperature), params.top_p);
    const std::string& token = SampleToken(probs, rng);
    generated.push_back(token);
    if (scanner.Feed(token)) {
      out.finish_reason = FinishReason::kStopSequence;
      break;
    }
  }
  out.text = Trim(scanner.text());
  out.tokens_emitted = scanner.tokens();
  return out;
}

GeneratedQuestion GenerateServerSide(const Backend& backend,
                                     std::string_view prompt,
                                     const GenerationParams& params,
                                     std::uint64_t seed) {
  CompletionRequest request;
  request.prompt = std::string(prompt);
  request.temperature = params.temperature;
  request.top_p = params.top_p;
  request.max_new_tokens = params.max_new_tokens;
  request.stop = {params.stop_text};
  request.seed = seed;
  const CompletionReply reply = backend.Complete(request);

  StopScanner scanner(params.stop_text);
  bool stopped = false;
  for (const auto& token : reply.tokens) {
    if (scanner.Feed(token)) {
      stopped = true;
      break;
    }
  }
  GeneratedQuestion out;
  out.tokens_emitted = scanner.tokens();
  std::string_view completion = reply.completion;
  if (auto pos = completion.find(params.stop_text);
      pos != std::string_view::npos) {
    completion = completion.substr(0, pos);
    stopped = true;
  }
  out.text = Trim(completion);
  if (out.tokens_emitted > params.max_new_tokens)
    throw ProtocolError("backend emitted " +
                        std::to_string(out.tokens_emitted) +
                        " tokens, over the limit of " +
                        std::to_string(params.max_new_tokens));
  if (stopped || reply.finish_reason == FinishReason::kStopSequence) {
    out.finish_reason = FinishReason::kStopSequence;
  } else {
    if (out.tokens_emitted != params.max_new_tokens)
      throw ProtocolError("length finish after " +
                          std::to_string(out.tokens_emitted) + " of " +
                          std::to_string(params.max_new_tokens) + " tokens");
    out.finish_reason = FinishReason::kLengthCap;
  }
  return out;
}

}  // namespace

GeneratedQuestion GenerateQuestion(const Backend& backend,
                                   std::string_view prompt,
                                   const GenerationParams& params,
                                   std::string_view paragraph_id) {
  params.Validate();
  const BackendDescriptor desc = backend.Descriptor();
  const std::uint64_t seed = SessionSeed(params.rng_seed, paragraph_id);
  GeneratedQuestion out =
      desc.sampling_locus == SamplingLocus::kClient
          ? GenerateClientSide(backend, prompt, params, seed)
          : GenerateServerSide(backend, prompt, params, seed);
  out.paragraph_id = std::string(paragraph_id);
  return out;
}

std::vector<GeneratedQuestion> GenerateAll(const Backend& backend,
                                           std::span<const GenerationTask> tasks,
                                           const GenerationParams& params,
                                           int max_in_flight) {
  params.Validate();
  if (max_in_flight < 1) throw ParameterError("max_in_flight must be >= 1");
  const auto n = static_cast<std::ptrdiff_t>(tasks.size());
  std::vector<GeneratedQuestion> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(max_in_flight)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = GenerateQuestion(backend, tasks[i].prompt, params,
                                tasks[i].paragraph_id);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace qgen::decode
