// audio/resample.h

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

#ifndef DAPTAIN_AUDIO_RESAMPLE_H_
#define DAPTAIN_AUDIO_RESAMPLE_H_

#include <vector>

#include "audio/wav.h"

namespace daptain {

// Windowed-sinc rate conversion.  Output length is
// round(len * dst_rate / src_rate); identical rates return the input
// unchanged.  Ends are treated as zero beyond the signal.
std::vector<float> Resample(const std::vector<float>& in, int src_rate,
                            int dst_rate);

AudioClip Resample(const AudioClip& clip, int dst_rate);

}  // namespace daptain

#endif  // DAPTAIN_AUDIO_RESAMPLE_H_
