// domain/types.cc

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

#include "domain/types.h"

#include <cmath>

#include "util/error.h"

namespace daptain {

void ValidateBatch(const DomainBatch& batch) {
  if (batch.features.rank() != 2) {
    throw ConfigError("domain batch: features must be [n, d]");
  }
  if (batch.n() < 1) throw ConfigError("domain batch: empty batch");
  if (batch.sample_ids.size() != static_cast<size_t>(batch.n())) {
    throw ConfigError("domain batch: one sample id per row required");
  }
  double acc = 0.0;
  for (float x : batch.features.v) acc += static_cast<double>(x);
  if (!std::isfinite(acc)) {
    throw DegenerateInputError("domain batch: non-finite features");
  }
}

DomainBatch MakeBatch(const std::vector<std::vector<double>>& rows,
                      float domain_label) {
  if (rows.empty()) throw ConfigError("domain batch: no rows");
  const int d = static_cast<int>(rows[0].size());
  DomainBatch batch;
  batch.features = Tensor<float>({static_cast<int>(rows.size()), d});
  batch.domain_label = domain_label;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != d) {
      throw ConfigError("domain batch: ragged feature rows");
    }
    for (int c = 0; c < d; ++c) {
      batch.features.v[r * static_cast<size_t>(d) + static_cast<size_t>(c)] =
          static_cast<float>(rows[r][static_cast<size_t>(c)]);
    }
    batch.sample_ids.push_back(static_cast<int64_t>(r));
  }
  ValidateBatch(batch);
  return batch;
}

const char* WeightModeName(WeightMode mode) {
  switch (mode) {
    case WeightMode::kIw:
      return "iw";
    case WeightMode::kMinimax:
      return "minimax";
    case WeightMode::kUniform:
      return "uniform";
  }
  return "unknown";
}

WeightVector UniformWeights(int n) {
  WeightVector w;
  w.weights.assign(static_cast<size_t>(n), 1.0);
  w.mode = WeightMode::kUniform;
  return w;
}

void CheckWeightInvariants(const WeightVector& w, double epsilon) {
  if (w.weights.empty()) throw ConfigError("weights: empty vector");
  double mean = 0.0;
  for (double x : w.weights) {
    if (!std::isfinite(x)) throw ConfigError("weights: non-finite entry");
    mean += x;
  }
  mean /= static_cast<double>(w.weights.size());
  switch (w.mode) {
    case WeightMode::kIw:
      for (double x : w.weights) {
        if (x < 0.0) throw ConfigError("weights: negative iw weight");
      }
      if (std::abs(mean - 1.0) > 1e-6) {
        throw ConfigError("weights: iw mean deviates from 1");
      }
      break;
    case WeightMode::kMinimax:
      for (double x : w.weights) {
        if (x <= 0.0 || x > 1.0) {
          throw ConfigError("weights: minimax weight outside (0, 1]");
        }
      }
      if (std::abs(mean - 1.0) > epsilon + 1e-12) {
        throw ConfigError("weights: minimax mean outside the epsilon band");
      }
      break;
    case WeightMode::kUniform:
      for (double x : w.weights) {
        if (x != 1.0) throw ConfigError("weights: uniform weight not 1");
      }
      break;
  }
}

}  // namespace daptain
