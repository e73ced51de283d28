// domain/minimax.h

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

#ifndef DAPTAIN_DOMAIN_MINIMAX_H_
#define DAPTAIN_DOMAIN_MINIMAX_H_

#include <cstdint>
#include <vector>

#include "domain/classifier.h"
#include "domain/types.h"

namespace daptain {

struct MinimaxConfig {
  double epsilon = 0.01;          // half-width of the mean constraint band
  int inner_steps = 10;           // ascent iterations per outer epoch
  double inner_step_size = 0.05;
  double weight_floor = 1e-3;     // keeps weights strictly positive
  double penalty_coefficient = 10.0;
};

void ValidateMinimaxConfig(const MinimaxConfig& cfg);

// Euclidean projection onto {floor <= w_i <= 1} intersected with
// {|mean(w) - 1| <= epsilon}: bisection on a scalar shift whose box clipping
// meets the mean constraint (the KKT form of the projection).
WeightVector ProjectWeights(const std::vector<double>& raw,
                            const MinimaxConfig& cfg);

struct MinimaxResult {
  WeightVector w;
  double robust_loss = 0.0;     // mean_i w_i loss_i at the final iterate
  double penalty = 0.0;         // violation penalty of the last raw iterate
  double penalized_loss = 0.0;  // robust_loss + penalty
};

// Projected gradient ascent of the weighted loss over the feasible weight
// set.  Raw iterates that leave [0, 1] before projection contribute a
// penalty_coefficient * ||violation||^2 term to the penalized loss.
MinimaxResult MinimaxWeights(const std::vector<double>& loss_per_sample,
                             const WeightVector& w_prev,
                             const MinimaxConfig& cfg);

struct RobustFitOptions {
  int epochs = 400;
  double learning_rate = 0.01;
  uint64_t seed = 0;
  double feature_penalty = 1.0;  // feature-expectation matching coefficient
  // RMSprop denominator floor.  Kept well above the usual 1e-8 so small
  // gradients fall back to plain descent instead of fixed-size sign steps,
  // which would cycle around the saddle forever.
  double rms_epsilon = 1e-2;
};

struct RobustFitResult {
  DomainClassifier classifier;
  WeightVector weights;
  double robust_loss = 0.0;
  std::vector<double> epoch_robust;   // objective at (theta_t, omega_t)
  std::vector<double> epoch_uniform;  // objective at (theta_t, omega == 1)
};

// Objective the robust fit solves as a saddle problem: the half-balanced
// weighted cross-entropy minus feature_penalty * ||omega-weighted source
// feature mean - unweighted source feature mean||^2.  The classifier
// minimizes it, the weights maximize it.
double RobustObjective(const DomainClassifier& clf, const DomainBatch& source,
                       const DomainBatch& target,
                       const std::vector<double>& weights,
                       double feature_penalty);

// Alternating optimization: an RMSprop step on the omega-weighted log loss,
// then a minimax weight update against the refreshed per-sample losses.
// Errors if the robust objective rises over 10 consecutive epochs.
RobustFitResult RobustBiasAwareFit(const DomainBatch& source,
                                   const DomainBatch& target,
                                   const MinimaxConfig& cfg,
                                   const RobustFitOptions& opt);

}  // namespace daptain

#endif  // DAPTAIN_DOMAIN_MINIMAX_H_
