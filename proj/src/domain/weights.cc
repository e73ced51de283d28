// domain/weights.cc

// Copyright 2026  Daptain Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "domain/weights.h"

#include <algorithm>
#include <cmath>

#include "util/error.h"

namespace daptain {

namespace {

constexpr double kProbClamp = 1e-7;

double Clamp01(double p) {
  if (p < kProbClamp) return kProbClamp;
  if (p > 1.0 - kProbClamp) return 1.0 - kProbClamp;
  return p;
}

double Unnormalized(double p, bool density_ratio) {
  const double pc = Clamp01(p);
  return density_ratio ? (1.0 - pc) / pc : 1.0 - pc;
}

// Mean unnormalized weight over source scores; errors when every classifier
// output sits at the upper clamp (no mass left on the source side).
double SourceNormalizer(const std::vector<double>& source_probs,
                        bool density_ratio) {
  if (source_probs.empty()) throw ConfigError("weights: no source scores");
  double mean = 0.0;
  double max_gap = 0.0;
  for (double p : source_probs) {
    if (!std::isfinite(p)) throw ConfigError("weights: non-finite score");
    mean += Unnormalized(p, density_ratio);
    max_gap = std::max(max_gap, 1.0 - Clamp01(p));
  }
  if (max_gap <= kProbClamp) {
    throw DegenerateInputError(
        "weights: classifier saturated at 1 on every source sample");
  }
  return mean / static_cast<double>(source_probs.size());
}

}  // namespace

std::vector<double> WeightsFromScores(const std::vector<double>& source_probs,
                                      bool density_ratio) {
  const double norm = SourceNormalizer(source_probs, density_ratio);
  std::vector<double> w(source_probs.size());
  for (size_t i = 0; i < source_probs.size(); ++i) {
    w[i] = Unnormalized(source_probs[i], density_ratio) / norm;
  }
  return w;
}

WeightVector ImportanceWeights(const DomainClassifier& c,
                               const DomainBatch& source,
                               bool density_ratio) {
  ValidateBatch(source);
  WeightVector w;
  w.weights = WeightsFromScores(c.Predict(source.features), density_ratio);
  w.mode = WeightMode::kIw;
  return w;
}

KldTermResult KldTermFromScores(const std::vector<double>& target_probs,
                                const std::vector<double>& source_probs,
                                bool density_ratio) {
  if (target_probs.empty()) throw ConfigError("weights: no target scores");
  const double norm = SourceNormalizer(source_probs, density_ratio);
  KldTermResult result;
  for (double p : target_probs) {
    if (!std::isfinite(p)) throw ConfigError("weights: non-finite score");
    double w = Unnormalized(p, density_ratio) / norm;
    if (w < kProbClamp) {
      w = kProbClamp;
      ++result.floored;
    }
    result.value += std::log(w);
  }
  result.value /= static_cast<double>(target_probs.size());
  return result;
}

KldTermResult WeightKldTerm(const DomainClassifier& c,
                            const DomainBatch& target,
                            const DomainBatch& source, bool density_ratio) {
  ValidateBatch(target);
  ValidateBatch(source);
  return KldTermFromScores(c.Predict(target.features),
                           c.Predict(source.features), density_ratio);
}

}  // namespace daptain
