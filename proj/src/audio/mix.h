// audio/mix.h

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

#ifndef DAPTAIN_AUDIO_MIX_H_
#define DAPTAIN_AUDIO_MIX_H_

#include <utility>
#include <vector>

namespace daptain {

struct MixResult {
  std::vector<float> mixture;
  double noise_gain = 0.0;
  double achieved_snr_db = 0.0;
};

// mixture = clean + g * noise over the clean length, with
// g = rms(clean) / (rms(noise) * 10^(snr_db / 20)).  The noise segment must
// be at least as long as the clean signal; extra noise samples are ignored.
// Throws DegenerateInputError when either side has zero energy.  The mixture
// is not clipped; clipping happens only on file writes.
MixResult MixAtSnr(const std::vector<float>& clean,
                   const std::vector<float>& noise, double snr_db);

// Splits a noise recording into two disjoint halves; the first half gets the
// extra sample on odd lengths.  Use the first half for training mixtures and
// the second for evaluation mixtures.
std::pair<std::vector<float>, std::vector<float>> SplitNoise(
    const std::vector<float>& noise);

double Rms(const std::vector<float>& x);

}  // namespace daptain

#endif  // DAPTAIN_AUDIO_MIX_H_
