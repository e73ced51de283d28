// vcae/enhance.h

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

#ifndef DAPTAIN_VCAE_ENHANCE_H_
#define DAPTAIN_VCAE_ENHANCE_H_

#include <vector>

#include "vcae/model.h"

namespace daptain {

// Frames the signal into input_len blocks whose output_len centers tile it,
// reconstructs each center through the autoencoder, and reassembles.  The
// result has exactly the input's length.  batch_size bounds how many blocks
// run through one forward pass.
std::vector<float> EnhanceClip(const VcaeModel& model,
                               const std::vector<float>& x,
                               int batch_size = 64);

}  // namespace daptain

#endif  // DAPTAIN_VCAE_ENHANCE_H_
