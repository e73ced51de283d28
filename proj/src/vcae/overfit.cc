// vcae/overfit.cc

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

#include "vcae/overfit.h"

#include "util/error.h"

namespace daptain {

bool DetectOverfit(const std::vector<double>& val_losses, int patience) {
  if (patience < 1) throw ConfigError("overfit: patience must be >= 1");
  if (static_cast<int>(val_losses.size()) < patience + 1) return false;
  int stale = 0;
  double best = val_losses.front();
  for (size_t i = 1; i < val_losses.size(); ++i) {
    if (val_losses[i] < best) {
      best = val_losses[i];
      stale = 0;
    } else {
      ++stale;
    }
  }
  return stale >= patience;
}

}  // namespace daptain
