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

#include "qgen/mock_backend.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>
#include <utility>

#include "qgen/dataset.h"

namespace qgen::decode {
namespace {

TokenDistribution Certain(std::string token) {
  TokenDistribution d;
  d.kind = WeightKind::kLogits;
  d.entries.push_back({std::move(token), 0.0});
  return d;
}

std::vector<std::string_view> Words(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    const std::size_t b = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > b) out.push_back(text.substr(b, i - b));
  }
  return out;
}

// Insertion-ordered logit table that keeps the larger logit on collision.
class LogitTable {
 public:
  void Raise(const std::string& token, double logit) {
    auto [it, inserted] = index_.try_emplace(token, dist_.entries.size());
    if (inserted) {
      dist_.entries.push_back({token, logit});
    } else {
      auto& w = dist_.entries[it->second].weight;
      w = std::max(w, logit);
    }
  }
  void Add(const std::string& token, double delta) {
    auto it = index_.find(token);
    if (it != index_.end()) dist_.entries[it->second].weight += delta;
  }
  TokenDistribution Take() {
    dist_.kind = WeightKind::kLogits;
    return std::move(dist_);
  }

 private:
  TokenDistribution dist_;
  std::unordered_map<std::string, std::size_t> index_;
};

constexpr std::array<std::pair<const char*, double>, 6> kOpeners = {{
    {"What", 2.5},
    {"Who", 1.5},
    {"When", 1.0},
    {"Where", 1.0},
    {"Which", 1.0},
    {"How", 0.5},
}};

constexpr double kMasked = -30.0;

std::string_view StripPunct(std::string_view w) {
  while (!w.empty() && std::ispunct(static_cast<unsigned char>(w.back())))
    w.remove_suffix(1);
  while (!w.empty() && std::ispunct(static_cast<unsigned char>(w.front())))
    w.remove_prefix(1);
  return w;
}

}  // namespace

std::vector<std::string> SplitIntoPieces(std::string_view text) {
  std::vector<std::string> pieces;
  for (auto w : Words(text))
    pieces.push_back(pieces.empty() ? std::string(w) : " " + std::string(w));
  return pieces;
}

ScriptedBackend::ScriptedBackend(std::vector<std::string> script, bool cycle)
    : script_(std::move(script)), cycle_(cycle) {}

BackendDescriptor ScriptedBackend::Descriptor() const {
  return {BackendKind::kMock, "", SamplingLocus::kClient};
}

TokenDistribution ScriptedBackend::NextToken(
    std::string_view, std::span<const std::string> generated) const {
  const std::size_t step = generated.size();
  if (script_.empty()) return Certain("\n");
  if (step < script_.size()) return Certain(script_[step]);
  if (cycle_) return Certain(script_[step % script_.size()]);
  return Certain("\n");
}

EchoBackend::EchoBackend(std::string_view text)
    : pieces_(SplitIntoPieces(text)) {}

BackendDescriptor EchoBackend::Descriptor() const {
  return {BackendKind::kMock, "", SamplingLocus::kClient};
}

TokenDistribution EchoBackend::NextToken(
    std::string_view, std::span<const std::string> generated) const {
  const std::size_t step = generated.size();
  return Certain(step < pieces_.size() ? pieces_[step] : "\n");
}

BackendDescriptor CopyBackend::Descriptor() const {
  return {BackendKind::kMock, "", SamplingLocus::kClient};
}

TokenDistribution CopyBackend::NextToken(
    std::string_view prompt, std::span<const std::string> generated) const {
  // Context words: everything before the trailing delimiter, minus markup.
  std::vector<std::string> context;
  auto words = Words(prompt);
  if (!words.empty()) words.pop_back();
  for (auto w : words) {
    if (w == dataset::kAnswerStart || w == dataset::kAnswerEnd ||
        w == dataset::kArtificialDelimiter)
      continue;
    const auto stripped = StripPunct(w);
    if (!stripped.empty()) context.emplace_back(stripped);
  }

  const std::size_t step = generated.size();
  LogitTable table;
  if (step == 0) {
    for (const auto& [word, logit] : kOpeners) table.Raise(word, logit);
    for (const auto& w : context) table.Raise(w, -3.0);
    table.Raise("?", kMasked);
    table.Raise("\n", kMasked);
    return table.Take();
  }

  std::string_view prev = generated.back();
  if (!prev.empty() && prev.front() == ' ') prev.remove_prefix(1);
  if (prev == "?") {
    table.Raise("\n", 8.0);
    table.Raise("?", kMasked);
    return table.Take();
  }

  for (const auto& w : context) table.Raise(" " + w, 0.0);
  for (std::size_t j = 0; j + 1 < context.size(); ++j) {
    if (context[j] == prev) table.Add(" " + context[j + 1], 4.0);
  }
  for (const auto& [word, logit] : kOpeners)
    table.Raise(" " + std::string(word), -6.0);
  table.Raise("?", -3.0 + 0.45 * static_cast<double>(step));
  table.Raise("\n", -6.0);
  return table.Take();
}

}  // namespace qgen::decode
