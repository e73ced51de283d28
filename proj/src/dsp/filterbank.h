// dsp/filterbank.h

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

#ifndef DAPTAIN_DSP_FILTERBANK_H_
#define DAPTAIN_DSP_FILTERBANK_H_

#include <vector>

namespace daptain {

// Dense filterbank weights, num_bands x num_bins.
using Filterbank = std::vector<std::vector<double>>;

// Triangular filters equally spaced on the mel scale
// (mel = 2595 log10(1 + f/700)) between fmin and fmax.
Filterbank MelFilterbank(int num_bands, int num_bins, int fft_len,
                         int sample_rate, double fmin, double fmax);

// Triangular filters with one-Bark half width, centers equally spaced on the
// Bark scale (bark = 6 asinh(f/600)) from 0 to bark(nyquist).  Band count is
// ceil(bark(nyquist)) + 1.
Filterbank BarkFilterbank(int num_bins, int fft_len, int sample_rate,
                          int* num_bands_out);

// Applies a filterbank to one spectrum slice.
std::vector<double> ApplyFilterbank(const Filterbank& fb, const double* spec);

}  // namespace daptain

#endif  // DAPTAIN_DSP_FILTERBANK_H_
