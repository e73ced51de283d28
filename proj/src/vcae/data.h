// vcae/data.h

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

#ifndef DAPTAIN_VCAE_DATA_H_
#define DAPTAIN_VCAE_DATA_H_

#include <cstdint>
#include <vector>

#include "audio/manifest.h"
#include "domain/types.h"
#include "nn/tensor.h"
#include "vcae/arch.h"

namespace daptain {

// Block-level training corpus.  Source rows are paired noisy blocks and
// clean center targets; target-domain audio contributes only the domain
// descriptors used by the weighting classifiers.  Feature rows are z-scored
// with statistics pooled over both domains.
struct TrainData {
  Tensor<float> train_blocks;            // [N, input_len] noisy source
  Tensor<float> train_targets;           // [N, output_len] clean centers
  std::vector<int64_t> train_block_ids;  // stable id per training block
  Tensor<float> val_blocks;              // [M, input_len]
  Tensor<float> val_targets;             // [M, output_len]
  DomainBatch source_features;           // one row per training block
  DomainBatch target_features;           // one row per target train block
};

// Reads every train/validation mixture, frames it into input_len blocks
// with output_len hops, and extracts block descriptors.  threads > 1
// parallelizes feature extraction across blocks.  Throws ConfigError when
// either manifest has no train split.
TrainData LoadTrainData(const Manifest& source, const Manifest& target,
                        const VcaeArchitecture& arch, int threads = 1);

}  // namespace daptain

#endif  // DAPTAIN_VCAE_DATA_H_
