// vcae/objective.h

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

#ifndef DAPTAIN_VCAE_OBJECTIVE_H_
#define DAPTAIN_VCAE_OBJECTIVE_H_

#include <utility>
#include <vector>

#include "nn/graph.h"
#include "nn/tensor.h"
#include "util/error.h"

namespace daptain {

struct VcaeObjectiveConfig {
  double lambda = 0.01;
  double target_variance = 330.0;
  double reg = 1e-6;
};

// mean_i w_i MSE_i + lambda |sumvar(z) - v| + reg * sum of squared weights.
// recon and target are [n, out_len], latent is [n, latent_dim], weights has
// one entry per sample.
template <typename T>
int BuildVcaeObjective(Graph<T>* g, int recon, Tensor<T> target,
                       Tensor<T> weights, int latent,
                       const VcaeObjectiveConfig& cfg,
                       const std::vector<int>& weight_ids) {
  if (cfg.lambda < 0 || cfg.target_variance <= 0 || cfg.reg < 0) {
    throw ConfigError("vcae objective: invalid coefficients");
  }
  int loss = g->WeightedMse(recon, std::move(target), std::move(weights));
  if (cfg.lambda > 0) {
    const int gap =
        g->SumVarGap(latent, static_cast<T>(cfg.target_variance));
    loss = g->Add(loss, g->Scale(gap, static_cast<T>(cfg.lambda)));
  }
  if (cfg.reg > 0 && !weight_ids.empty()) {
    loss = g->Add(loss, g->L2Penalty(weight_ids, static_cast<T>(cfg.reg)));
  }
  return loss;
}

}  // namespace daptain

#endif  // DAPTAIN_VCAE_OBJECTIVE_H_
