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

#include <algorithm>
#include <cmath>

#include "qgen/metrics.h"
#include "qgen/porter_stemmer.h"

namespace qgen::metrics {
namespace {

class Aligner {
 public:
  Aligner(std::size_t pred_size, std::size_t ref_size)
      : pred_to_ref_(pred_size, kUnaligned), ref_used_(ref_size, false) {}

  // One matching stage over keys (surface forms or stems). Takes the
  // longest run of free matching pairs first, earliest in the prediction on
  // ties, until no free pair matches.
  std::size_t Stage(std::span<const std::string> pk,
                    std::span<const std::string> rk) {
    std::size_t added = 0;
    for (;;) {
      std::size_t best_run = 0, best_i = 0, best_j = 0;
      for (std::size_t i = 0; i < pk.size(); ++i) {
        for (std::size_t j = 0; j < rk.size(); ++j) {
          if (!Free(pk, rk, i, j)) continue;
          std::size_t run = 1;
          while (Free(pk, rk, i + run, j + run)) ++run;
          if (run > best_run) {
            best_run = run;
            best_i = i;
            best_j = j;
          }
        }
      }
      if (best_run == 0) return added;
      for (std::size_t k = 0; k < best_run; ++k) {
        pred_to_ref_[best_i + k] = best_j + k;
        ref_used_[best_j + k] = true;
      }
      added += best_run;
    }
  }

  MeteorAlignment Finish(std::size_t exact, std::size_t stem) const {
    MeteorAlignment a;
    a.exact_matches = exact;
    a.stem_matches = stem;
    for (std::size_t i = 0; i < pred_to_ref_.size(); ++i)
      if (pred_to_ref_[i] != kUnaligned) a.pairs.emplace_back(i, pred_to_ref_[i]);
    for (std::size_t k = 0; k < a.pairs.size(); ++k) {
      if (k == 0 || a.pairs[k].first != a.pairs[k - 1].first + 1 ||
          a.pairs[k].second != a.pairs[k - 1].second + 1)
        ++a.chunks;
    }
    return a;
  }

 private:
  static constexpr std::size_t kUnaligned = static_cast<std::size_t>(-1);

  bool Free(std::span<const std::string> pk, std::span<const std::string> rk,
            std::size_t i, std::size_t j) const {
    return i < pk.size() && j < rk.size() && pred_to_ref_[i] == kUnaligned &&
           !ref_used_[j] && pk[i] == rk[j];
  }

  std::vector<std::size_t> pred_to_ref_;
  std::vector<bool> ref_used_;
};

std::vector<std::string> Stems(std::span<const std::string> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(PorterStem(t));
  return out;
}

}  // namespace

MeteorAlignment AlignMeteor(std::span<const std::string> prediction,
                            std::span<const std::string> reference) {
  Aligner aligner(prediction.size(), reference.size());
  const std::size_t exact = aligner.Stage(prediction, reference);
  const auto pred_stems = Stems(prediction);
  const auto ref_stems = Stems(reference);
  const std::size_t stem = aligner.Stage(pred_stems, ref_stems);
  return aligner.Finish(exact, stem);
}

double Meteor(std::span<const std::string> prediction,
              std::span<const std::string> reference,
              const MeteorParams& params) {
  if (prediction.empty() || reference.empty()) return 0.0;
  const MeteorAlignment a = AlignMeteor(prediction, reference);
  const double m = static_cast<double>(a.matches());
  if (m == 0.0) return 0.0;
  const double precision = m / static_cast<double>(prediction.size());
  const double recall = m / static_cast<double>(reference.size());
  const double fmean = precision * recall /
                       (params.alpha * precision + (1.0 - params.alpha) * recall);
  const double penalty =
      params.gamma * std::pow(static_cast<double>(a.chunks) / m, params.beta);
  return 100.0 * fmean * (1.0 - penalty);
}

}  // namespace qgen::metrics
