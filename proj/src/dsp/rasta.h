// dsp/rasta.h

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

#ifndef DAPTAIN_DSP_RASTA_H_
#define DAPTAIN_DSP_RASTA_H_

#include <cstddef>
#include <vector>

namespace daptain {

constexpr int kRastaCepstra = 13;

// Log critical-band power spectra of a 16 kHz signal: 32 ms / 16 ms Hann
// STFT, power pooled into one-Bark triangular bands, natural log with floor
// 1e-10.  Output is frames x num_bands (21 bands at 16 kHz).
std::vector<std::vector<double>> BarkLogSpectra(const float* x, size_t n);

// Band-pass filters each band trajectory with the relative-spectral IIR
// y[t] = 0.98 y[t-1] + 0.1 (2 x[t] + x[t-1] - x[t-3] - 2 x[t-4]).
// The input history is seeded by replicating the first frame, so a
// stationary trajectory maps to exactly zero from the first output frame.
std::vector<std::vector<double>> RastaFilter(
    const std::vector<std::vector<double>>& log_bands);

// Full pipeline: Bark log spectra -> relative-spectral filter -> exp ->
// equal-loudness weighting -> cube-root loudness -> autocorrelation via
// inverse cosine transform -> order-12 all-pole model -> 13 cepstra
// (c0 = log prediction error, c1..c12 from the model polynomial).
// A non-positive prediction error is retried once with lag 0 scaled by
// (1 + 1e-9); a second failure raises a degenerate-input error.
std::vector<std::vector<double>> RastaPlp(const float* x, size_t n,
                                          int model_order = 12);

}  // namespace daptain

#endif  // DAPTAIN_DSP_RASTA_H_
