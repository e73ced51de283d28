// dsp/dscc.h

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

#ifndef DAPTAIN_DSP_DSCC_H_
#define DAPTAIN_DSP_DSCC_H_

#include <cstddef>
#include <vector>

namespace daptain {

constexpr int kDsccCoeffs = 13;
constexpr int kDsccMelBands = 40;

// 40-band mel magnitude spectra of a 16 kHz signal, 32 ms / 16 ms framing.
std::vector<std::vector<double>> MelSpectra(const float* x, size_t n);

// Temporal delta over +-2 frames with regression weights
// d[t] = (x[t+1] - x[t-1] + 2 (x[t+2] - x[t-2])) / 10, edges replicated.
std::vector<std::vector<double>> DeltaFrames(
    const std::vector<std::vector<double>>& frames);

// Maps each column to standard-normal scores by midrank:
// value -> InverseNormalCdf((rank - 0.5) / num_frames), with tied values
// sharing their average rank.  A constant column maps to all zeros.
std::vector<std::vector<double>> GaussianizeColumns(
    const std::vector<std::vector<double>>& frames);

// Inverse of the standard normal CDF (rational approximation, relative
// error below 1.2e-9 on (0, 1)).
double InverseNormalCdf(double p);

// Delta-spectral cepstra from precomputed mel spectra: delta ->
// per-column Gaussianization -> orthonormal DCT-II truncated to 13.
// Accepts any frame count >= 1 (short inputs lean on edge replication).
std::vector<std::vector<double>> DsccFromMel(
    const std::vector<std::vector<double>>& mel);

// Variant without the rank step: DCT-II of the raw delta spectra.  Rank
// scores always occupy the same grid, so their frame average carries no
// information; short analysis blocks that get pooled over frames use this.
std::vector<std::vector<double>> DeltaCepstraFromMel(
    const std::vector<std::vector<double>>& mel);

// Delta-spectral cepstral coefficients of a 16 kHz clip.  Requires at least
// 5 frames so the +-2 delta window is fully populated somewhere.
std::vector<std::vector<double>> Dscc(const float* x, size_t n);

}  // namespace daptain

#endif  // DAPTAIN_DSP_DSCC_H_
