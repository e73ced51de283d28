// dsp/features.cc

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

#include "dsp/features.h"

#include <cmath>

#include "dsp/ams.h"
#include "dsp/dscc.h"
#include "dsp/rasta.h"
#include "util/error.h"

namespace daptain {

namespace {

// Frame-average of a frames x dim matrix appended at out[offset..].
void AppendFrameMean(const std::vector<std::vector<double>>& frames,
                     int offset, int dim, std::vector<double>* out) {
  for (const std::vector<double>& f : frames) {
    for (int d = 0; d < dim; ++d) {
      (*out)[static_cast<size_t>(offset + d)] += f[static_cast<size_t>(d)];
    }
  }
  const double inv = 1.0 / static_cast<double>(frames.size());
  for (int d = 0; d < dim; ++d) {
    (*out)[static_cast<size_t>(offset + d)] *= inv;
  }
}

}  // namespace

std::vector<double> BlockFeatureVector(const float* x, size_t n) {
  std::vector<double> out(kFeatureDim, 0.0);
  AppendFrameMean(AmsFeatures(x, n), kAmsOffset, kAmsBands, &out);
  AppendFrameMean(RastaPlp(x, n), kRastaOffset, kRastaCepstra, &out);
  // Blocks are too short for the 5-frame delta context of the clip-level op,
  // and frame-averaged rank scores are data-independent, so blocks pool the
  // raw delta cepstra instead.
  AppendFrameMean(DeltaCepstraFromMel(MelSpectra(x, n)), kDsccOffset,
                  kDsccCoeffs, &out);
  for (double v : out) {
    if (!std::isfinite(v)) {
      throw DegenerateInputError("block features: non-finite value");
    }
  }
  return out;
}

FeatureStats ComputeFeatureStats(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DegenerateInputError("feature stats: no rows");
  const size_t dim = rows[0].size();
  FeatureStats stats;
  stats.mean.assign(dim, 0.0);
  stats.sd.assign(dim, 0.0);
  for (const std::vector<double>& r : rows) {
    for (size_t d = 0; d < dim; ++d) stats.mean[d] += r[d];
  }
  const double inv = 1.0 / static_cast<double>(rows.size());
  for (size_t d = 0; d < dim; ++d) stats.mean[d] *= inv;
  for (const std::vector<double>& r : rows) {
    for (size_t d = 0; d < dim; ++d) {
      const double c = r[d] - stats.mean[d];
      stats.sd[d] += c * c;
    }
  }
  for (size_t d = 0; d < dim; ++d) {
    const double sd = std::sqrt(stats.sd[d] * inv);
    stats.sd[d] = sd > 1e-12 ? sd : 1.0;
  }
  return stats;
}

void NormalizeFeature(const FeatureStats& stats, std::vector<double>* row) {
  for (size_t d = 0; d < row->size(); ++d) {
    (*row)[d] = ((*row)[d] - stats.mean[d]) / stats.sd[d];
  }
}

}  // namespace daptain
