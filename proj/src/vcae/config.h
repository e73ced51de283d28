// vcae/config.h

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

#ifndef DAPTAIN_VCAE_CONFIG_H_
#define DAPTAIN_VCAE_CONFIG_H_

#include <cstdint>
#include <string>

namespace daptain {

// How source training blocks are weighted: uniformly, by an importance
// weighting classifier pair, or by the minimax robust weights.
enum class TrainMethod { kBaseline, kIw, kMinimax };

const char* TrainMethodName(TrainMethod m);

// Throws ConfigError on unknown names.
TrainMethod ParseTrainMethod(const std::string& name);

struct TrainingConfig {
  double lambda = 0.01;            // variance constraint coefficient
  double target_variance = 330.0;  // summed latent variance target
  double reg = 1e-6;               // L2 coefficient over weight tensors
  int epochs = 30;
  int batch_size = 512;
  double learning_rate = 0.001;
  uint64_t seed = 0;
  TrainMethod method = TrainMethod::kBaseline;
  double adversarial_beta = 1.0;  // gradient-reversal strength for C2
  int patience = 3;               // epochs without val improvement = overfit
};

// Throws ConfigError when any field is out of range.
void ValidateTrainingConfig(const TrainingConfig& cfg);

}  // namespace daptain

#endif  // DAPTAIN_VCAE_CONFIG_H_
