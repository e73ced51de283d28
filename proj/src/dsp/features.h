// dsp/features.h

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

#ifndef DAPTAIN_DSP_FEATURES_H_
#define DAPTAIN_DSP_FEATURES_H_

#include <cstddef>
#include <vector>

namespace daptain {

// Stacked block descriptor layout: AMS, then RASTA-PLP, then DSCC.
constexpr int kAmsOffset = 0;
constexpr int kRastaOffset = 15;
constexpr int kDsccOffset = 28;
constexpr int kFeatureDim = 41;

// Raw (un-normalized) 41-vector for one signal block: per-frame AMS,
// RASTA-PLP, and DSCC averaged over frames and concatenated.
std::vector<double> BlockFeatureVector(const float* x, size_t n);

// Per-dimension corpus statistics for feature normalization.
struct FeatureStats {
  std::vector<double> mean;
  std::vector<double> sd;
};

// Mean and population standard deviation per dimension, accumulated in row
// order.  Dimensions with vanishing spread get sd 1 so they normalize to a
// constant instead of exploding.
FeatureStats ComputeFeatureStats(const std::vector<std::vector<double>>& rows);

// In-place (x - mean) / sd.
void NormalizeFeature(const FeatureStats& stats, std::vector<double>* row);

}  // namespace daptain

#endif  // DAPTAIN_DSP_FEATURES_H_
