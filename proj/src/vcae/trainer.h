// vcae/trainer.h

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

#ifndef DAPTAIN_VCAE_TRAINER_H_
#define DAPTAIN_VCAE_TRAINER_H_

#include <string>
#include <vector>

#include "vcae/config.h"
#include "vcae/data.h"
#include "vcae/model.h"

namespace daptain {

struct EpochStats {
  int epoch = 0;             // 1-based
  double train_loss = 0.0;   // objective averaged over the epoch's samples
  double val_loss = 0.0;     // unweighted objective on the validation set
  bool has_val = false;
  double mean_omega = 1.0;
  double js_estimate = 0.0;  // weighted-divergence estimate, iw mode only
  bool has_js = false;
  double variance_gap = 0.0;  // signed sumvar(validation latents) - v
  bool normalized = false;    // latent normalization active this epoch
};

// Output artifacts; any empty path is skipped.  The checkpoint is rewritten
// after every epoch, the log gains one JSON line per epoch, and the weight
// dump records the final per-block omega.
struct TrainPaths {
  std::string checkpoint_path;
  std::string log_path;
  std::string weights_path;
};

struct TrainResult {
  VcaeModel model;
  std::vector<EpochStats> history;
};

// Runs the per-epoch schedule: derive block weights (per method), one pass
// of autoencoder updates over shuffled weighted batches, validation, and the
// overfit check that routes the next epoch through latent normalization.
// Throws ConfigError on empty corpora and TrainingError with epoch/batch
// coordinates when a loss turns non-finite.
TrainResult TrainVcae(const TrainData& data, const VcaeArchitecture& arch,
                      const TrainingConfig& cfg, const TrainPaths& paths);

}  // namespace daptain

#endif  // DAPTAIN_VCAE_TRAINER_H_
