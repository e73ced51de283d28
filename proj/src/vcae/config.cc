// vcae/config.cc

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

#include "vcae/config.h"

#include "util/error.h"

namespace daptain {

const char* TrainMethodName(TrainMethod m) {
  switch (m) {
    case TrainMethod::kBaseline:
      return "baseline";
    case TrainMethod::kIw:
      return "iw";
    case TrainMethod::kMinimax:
      return "minimax";
  }
  throw ConfigError("train method: unknown enum value");
}

TrainMethod ParseTrainMethod(const std::string& name) {
  if (name == "baseline") return TrainMethod::kBaseline;
  if (name == "iw") return TrainMethod::kIw;
  if (name == "minimax") return TrainMethod::kMinimax;
  throw ConfigError("train method: unknown name '" + name +
                    "' (expected baseline, iw, or minimax)");
}

void ValidateTrainingConfig(const TrainingConfig& cfg) {
  if (cfg.lambda < 0) throw ConfigError("training: lambda must be >= 0");
  if (cfg.target_variance <= 0) {
    throw ConfigError("training: target variance must be positive");
  }
  if (cfg.reg < 0) throw ConfigError("training: reg must be >= 0");
  if (cfg.epochs < 1) throw ConfigError("training: epochs must be >= 1");
  if (cfg.batch_size < 1) throw ConfigError("training: batch size must be >= 1");
  if (cfg.learning_rate <= 0) {
    throw ConfigError("training: learning rate must be positive");
  }
  if (cfg.adversarial_beta < 0) {
    throw ConfigError("training: adversarial beta must be >= 0");
  }
  if (cfg.patience < 1) throw ConfigError("training: patience must be >= 1");
}

}  // namespace daptain
