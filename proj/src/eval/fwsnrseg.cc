// eval/fwsnrseg.cc

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

#include "eval/fwsnrseg.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dsp/filterbank.h"
#include "dsp/stft.h"
#include "util/error.h"

namespace daptain {

namespace {

constexpr int kBands = 25;
constexpr double kGamma = 0.2;  // band weight exponent
constexpr double kFloorDb = -10.0;
constexpr double kCeilDb = 35.0;

double BandSnrDb(double clean_mag, double proc_mag) {
  const double err = clean_mag - proc_mag;
  if (err == 0.0) return kCeilDb;
  if (proc_mag == 0.0) return kFloorDb;
  const double snr = 10.0 * std::log10(proc_mag * proc_mag / (err * err));
  return std::clamp(snr, kFloorDb, kCeilDb);
}

}  // namespace

double FwSnrSeg(const AudioClip& clean, const AudioClip& processed) {
  if (clean.sample_rate != processed.sample_rate) {
    throw ConfigError("fwsnrseg: sample rates differ");
  }
  if (clean.samples.size() != processed.samples.size()) {
    throw ConfigError("fwsnrseg: lengths differ");
  }
  bool any = false;
  for (float v : clean.samples) any = any || v != 0.0f;
  if (!any) throw DegenerateInputError("fwsnrseg: clean clip is silent");

  const int fs = clean.sample_rate;
  const int win = static_cast<int>(std::lround(0.032 * fs));
  const int hop = win / 2;
  int fft = 1;
  while (fft < win) fft *= 2;
  const int64_t n = static_cast<int64_t>(clean.samples.size());
  if (n < win) throw DegenerateInputError("fwsnrseg: clip shorter than one frame");
  // Full frames only: no zero-padded tail segment.
  const int64_t n_full = win + ((n - win) / hop) * hop;

  const Stft cs = ComputeStft(clean.samples.data(), n_full, win, hop, fft);
  const Stft ps = ComputeStft(processed.samples.data(), n_full, win, hop, fft);
  const Filterbank mel =
      MelFilterbank(kBands, cs.num_bins, fft, fs, 0.0, fs / 2.0);

  double total = 0.0;
  int segments = 0;
  for (int t = 0; t < cs.num_frames; ++t) {
    const std::vector<double> cb =
        ApplyFilterbank(mel, &cs.mag[static_cast<size_t>(t) * cs.num_bins]);
    const std::vector<double> pb =
        ApplyFilterbank(mel, &ps.mag[static_cast<size_t>(t) * ps.num_bins]);
    double num = 0.0, den = 0.0;
    for (int b = 0; b < kBands; ++b) {
      const double weight = std::pow(cb[static_cast<size_t>(b)], kGamma);
      num += weight * BandSnrDb(cb[static_cast<size_t>(b)],
                                pb[static_cast<size_t>(b)]);
      den += weight;
    }
    if (den <= 0.0) continue;  // clean frame carries no band energy
    total += std::clamp(num / den, kFloorDb, kCeilDb);
    ++segments;
  }
  if (segments == 0) {
    throw DegenerateInputError("fwsnrseg: no voiced segments");
  }
  return total / segments;
}

}  // namespace daptain
