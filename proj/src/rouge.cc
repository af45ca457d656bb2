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

#include "qgen/metrics.h"

namespace qgen::metrics {

double RougeL(std::span<const std::string> prediction,
              std::span<const std::string> reference, double beta) {
  if (prediction.empty() || reference.empty()) return 0.0;
  const double lcs = static_cast<double>(LcsLength(prediction, reference));
  if (lcs == 0.0) return 0.0;
  const double recall = lcs / static_cast<double>(reference.size());
  const double precision = lcs / static_cast<double>(prediction.size());
  const double b2 = beta * beta;
  return 100.0 * (1.0 + b2) * recall * precision / (recall + b2 * precision);
}

}  // namespace qgen::metrics
