// dsp/ams.h

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

#ifndef DAPTAIN_DSP_AMS_H_
#define DAPTAIN_DSP_AMS_H_

#include <cstddef>
#include <vector>

namespace daptain {

constexpr int kAmsBands = 15;

// Modulation band centers in Hz, log-spaced from 15.6 to 400.
std::vector<double> AmsBandCenters();

// Amplitude modulation spectrogram of a 16 kHz signal.  The full-wave
// rectified envelope is decimated by 4 (block average), analyzed with
// 128-point Hann DFT frames at hop 64 (32 ms / 16 ms at the envelope rate),
// and pooled into 15 triangular modulation bands between 15.6 and 400 Hz.
// The first band is a low-pass taper so near-DC modulation energy is kept.
// Band energies are log10-compressed with floor 1e-10.  Output is one
// 15-vector per frame; inputs shorter than one frame are zero-padded.
std::vector<std::vector<double>> AmsFeatures(const float* x, size_t n);

}  // namespace daptain

#endif  // DAPTAIN_DSP_AMS_H_
