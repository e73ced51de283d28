// domain/types.h

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

#ifndef DAPTAIN_DOMAIN_TYPES_H_
#define DAPTAIN_DOMAIN_TYPES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nn/tensor.h"

namespace daptain {

// One domain's feature batch.  domain_label is 1 for source and 0 for target
// and is shared by every sample in the batch.
struct DomainBatch {
  Tensor<float> features;           // [n, d]
  float domain_label = 1.0f;
  std::vector<int64_t> sample_ids;  // one id per row

  int n() const { return features.rank() == 2 ? features.dim(0) : 0; }
  int dim() const { return features.rank() == 2 ? features.dim(1) : 0; }
};

// Throws ConfigError on shape problems and DegenerateInputError on
// non-finite features.
void ValidateBatch(const DomainBatch& batch);

DomainBatch MakeBatch(const std::vector<std::vector<double>>& rows,
                      float domain_label);

enum class WeightMode { kIw, kMinimax, kUniform };

const char* WeightModeName(WeightMode mode);

// Per-source-sample importance weights.
struct WeightVector {
  std::vector<double> weights;
  WeightMode mode = WeightMode::kUniform;
};

WeightVector UniformWeights(int n);

// Enforces the per-mode invariants: iw weights are nonnegative with mean 1
// within 1e-6; minimax weights sit in (0, 1] with |mean - 1| <= epsilon;
// uniform weights are all exactly 1.
void CheckWeightInvariants(const WeightVector& w, double epsilon);

}  // namespace daptain

#endif  // DAPTAIN_DOMAIN_TYPES_H_
