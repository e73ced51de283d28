// vcae/overfit.h

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

#ifndef DAPTAIN_VCAE_OVERFIT_H_
#define DAPTAIN_VCAE_OVERFIT_H_

#include <vector>

#include "nn/graph.h"
#include "nn/tensor.h"

namespace daptain {

// True when the validation loss has failed to improve on its running best
// for the last `patience` consecutive epochs.  Histories shorter than
// patience + 1 epochs never qualify.  patience must be >= 1.
bool DetectOverfit(const std::vector<double>& val_losses, int patience);

// Recenters and rescales z [n, d] about its column means so the summed
// per-dimension variance equals target up to the precision of T.  Requires
// n >= 2 and a non-degenerate batch (throws DegenerateInputError when the
// variance vanishes).
template <typename T>
Tensor<T> NormalizeLatentBatch(const Tensor<T>& z, double target_variance) {
  Graph<T> g;
  const int zin = g.ExternalLeaf(&z, nullptr);
  const int y = g.NormalizeLatent(zin, static_cast<T>(target_variance));
  return g.value(y);
}

}  // namespace daptain

#endif  // DAPTAIN_VCAE_OVERFIT_H_
