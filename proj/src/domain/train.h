// domain/train.h

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

#ifndef DAPTAIN_DOMAIN_TRAIN_H_
#define DAPTAIN_DOMAIN_TRAIN_H_

#include <cstdint>
#include <vector>

#include "domain/classifier.h"
#include "domain/types.h"

namespace daptain {

struct DomainTrainOptions {
  int epochs = 200;
  double learning_rate = 0.01;
  float beta = 1.0f;  // gradient-reversal strength for adversarial training
};

struct DomainTrainStats {
  std::vector<double> losses;  // full-batch loss per epoch
  double final_loss = 0.0;     // loss after the last parameter update
  bool early_stopped = false;
};

// Full-batch RMSprop on weighted binary cross-entropy with label 1 for
// source rows.  Samples are weighted so each domain contributes half the
// objective regardless of batch sizes; source_weights (mean 1) multiply on
// top.  Training stops early once the loss fails to improve over a 5-epoch
// window twice.
DomainTrainStats TrainDomainClassifier(DomainClassifier* clf,
                                       const DomainBatch& source,
                                       const DomainBatch& target,
                                       const std::vector<double>* source_weights,
                                       bool adversarial,
                                       const DomainTrainOptions& opt);

// First-stage classifier C: unweighted discrimination.
DomainClassifier TrainClassifierC(const DomainBatch& source,
                                  const DomainBatch& target, int epochs,
                                  uint64_t seed);

struct C2Result {
  double js_estimate = 0.0;
  DomainTrainStats stats;
};

// Second-stage classifier C2 on omega-weighted source samples.  The
// converged weighted cross-entropy l gives the Jensen-Shannon estimate
// between the weighted source and target densities as log(2) - l.  The
// classifier is trained in place so a caller can share its embedding.
C2Result TrainClassifierC2(DomainClassifier* c2, const DomainBatch& source,
                           const DomainBatch& target, const WeightVector& w,
                           bool adversarial, const DomainTrainOptions& opt);

// Weighted cross-entropy of a trained classifier on the two batches, using
// the same per-domain balancing as training; exposed for diagnostics.
double WeightedDomainLoss(const DomainClassifier& clf,
                          const DomainBatch& source, const DomainBatch& target,
                          const std::vector<double>* source_weights);

}  // namespace daptain

#endif  // DAPTAIN_DOMAIN_TRAIN_H_
