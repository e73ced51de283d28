// domain/weights.h

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

#ifndef DAPTAIN_DOMAIN_WEIGHTS_H_
#define DAPTAIN_DOMAIN_WEIGHTS_H_

#include <vector>

#include "domain/classifier.h"
#include "domain/types.h"

namespace daptain {

// Importance weights from domain-classifier outputs on source samples:
// omega_i = (1 - C(x_i)) / mean_j(1 - C(x_j)), so mean(omega) = 1.  With
// density_ratio set, the unnormalized weight is (1 - C) / C instead (the
// exact target/source density ratio under a balanced Bayes classifier).
// Probabilities are clamped to [1e-7, 1 - 1e-7] first.
std::vector<double> WeightsFromScores(const std::vector<double>& source_probs,
                                      bool density_ratio);

WeightVector ImportanceWeights(const DomainClassifier& c,
                               const DomainBatch& source,
                               bool density_ratio = false);

// mean_j log omega(z_j) over target samples, with omega normalized by the
// source batch.  Rises as the weighted source density approaches the target
// density; a diagnostic for the weighted divergence objective.
struct KldTermResult {
  double value = 0.0;
  int floored = 0;  // target weights floored at 1e-7
};

KldTermResult KldTermFromScores(const std::vector<double>& target_probs,
                                const std::vector<double>& source_probs,
                                bool density_ratio);

KldTermResult WeightKldTerm(const DomainClassifier& c,
                            const DomainBatch& target,
                            const DomainBatch& source,
                            bool density_ratio = false);

}  // namespace daptain

#endif  // DAPTAIN_DOMAIN_WEIGHTS_H_
