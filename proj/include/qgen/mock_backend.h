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

#ifndef QGEN_MOCK_BACKEND_H_
#define QGEN_MOCK_BACKEND_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/backend.h"

namespace qgen::decode {

// Emits script[i] at step i with probability one. Past the end of the script
// it either starts over (cycle) or emits "\n".
class ScriptedBackend : public Backend {
 public:
  explicit ScriptedBackend(std::vector<std::string> script, bool cycle = false);

  BackendDescriptor Descriptor() const override;
  TokenDistribution NextToken(
      std::string_view prompt,
      std::span<const std::string> generated) const override;

 private:
  std::vector<std::string> script_;
  bool cycle_;
};

// Emits a fixed text word by word, then "\n", whatever the prompt.
class EchoBackend : public Backend {
 public:
  explicit EchoBackend(std::string_view text);

  BackendDescriptor Descriptor() const override;
  TokenDistribution NextToken(
      std::string_view prompt,
      std::span<const std::string> generated) const override;

  const std::vector<std::string>& pieces() const { return pieces_; }

 private:
  std::vector<std::string> pieces_;
};

// A small stand-in language model that writes copy-style questions: it opens
// with an interrogative, then follows word bigrams of the prompt's context,
// and grows more likely to close with "?" and "\n" as the question
// lengthens. Logits are a pure function of (prompt, generated).
class CopyBackend : public Backend {
 public:
  BackendDescriptor Descriptor() const override;
  TokenDistribution NextToken(
      std::string_view prompt,
      std::span<const std::string> generated) const override;
};

// Splits text into whitespace-separated pieces, with a leading space on every
// piece after the first, so that concatenation gives back the words joined by
// single spaces.
std::vector<std::string> SplitIntoPieces(std::string_view text);

}  // namespace qgen::decode

#endif  // QGEN_MOCK_BACKEND_H_
