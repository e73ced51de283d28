// vcae/enhance.cc

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

#include "vcae/enhance.h"

#include <algorithm>

#include "audio/blocks.h"
#include "util/error.h"

namespace daptain {

std::vector<float> EnhanceClip(const VcaeModel& model,
                               const std::vector<float>& x, int batch_size) {
  if (batch_size < 1) throw ConfigError("enhance: batch size must be >= 1");
  const VcaeArchitecture& a = model.arch();
  const BlockSet set = FrameBlocks(x, a.input_len, a.output_len);
  const int total = static_cast<int>(set.blocks.size());

  std::vector<float> out;
  out.reserve(static_cast<size_t>(total) * a.output_len);
  for (int start = 0; start < total; start += batch_size) {
    const int count = std::min(batch_size, total - start);
    Tensor<float> batch({count, a.input_len});
    for (int i = 0; i < count; ++i) {
      std::copy(set.blocks[static_cast<size_t>(start + i)].begin(),
                set.blocks[static_cast<size_t>(start + i)].end(),
                batch.v.begin() + static_cast<int64_t>(i) * a.input_len);
    }
    const Tensor<float> centers = model.Decode(model.Encode(batch));
    out.insert(out.end(), centers.v.begin(), centers.v.end());
  }
  out.resize(static_cast<size_t>(set.original_len));
  return out;
}

}  // namespace daptain
