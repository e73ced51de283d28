// dsp/stft.h

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

#ifndef DAPTAIN_DSP_STFT_H_
#define DAPTAIN_DSP_STFT_H_

#include <cstdint>
#include <vector>

namespace daptain {

// Magnitude short-time spectra with a periodic Hann window.  The final
// partial frame is zero-padded, so num_frames = 1 + ceil((n - win) / hop).
struct Stft {
  int win_len = 0;
  int hop = 0;
  int fft_len = 0;
  int num_frames = 0;
  int num_bins = 0;  // fft_len / 2 + 1
  std::vector<double> mag;  // num_frames x num_bins, row major

  double at(int frame, int bin) const {
    return mag[static_cast<size_t>(frame) * num_bins + bin];
  }
};

// Requires n >= win_len (DegenerateInputError otherwise) and a power-of-two
// fft_len >= win_len.
Stft ComputeStft(const float* x, int64_t n, int win_len, int hop, int fft_len);

// In-place iterative radix-2 FFT; sizes must be powers of two.
void Fft(std::vector<double>* re, std::vector<double>* im);

// 32 ms window and 16 ms hop at the given rate, fft_len = next power of two.
Stft SpeechStft(const float* x, int64_t n, int sample_rate);

}  // namespace daptain

#endif  // DAPTAIN_DSP_STFT_H_
