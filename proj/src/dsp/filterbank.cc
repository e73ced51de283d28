// dsp/filterbank.cc

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

#include "dsp/filterbank.h"

#include <cmath>

#include "util/error.h"

namespace daptain {

namespace {

double HzToMel(double f) { return 2595.0 * std::log10(1.0 + f / 700.0); }
double MelToHz(double m) { return 700.0 * (std::pow(10.0, m / 2595.0) - 1.0); }
double HzToBark(double f) { return 6.0 * std::asinh(f / 600.0); }

}  // namespace

Filterbank MelFilterbank(int num_bands, int num_bins, int fft_len,
                         int sample_rate, double fmin, double fmax) {
  if (num_bands < 1 || num_bins < 2) throw ConfigError("mel filterbank: bad geometry");
  const double mel_lo = HzToMel(fmin);
  const double mel_hi = HzToMel(fmax);
  std::vector<double> edges(static_cast<size_t>(num_bands) + 2);
  for (int i = 0; i < num_bands + 2; ++i) {
    edges[static_cast<size_t>(i)] =
        MelToHz(mel_lo + (mel_hi - mel_lo) * i / (num_bands + 1));
  }

  Filterbank fb(static_cast<size_t>(num_bands),
                std::vector<double>(static_cast<size_t>(num_bins), 0.0));
  for (int b = 0; b < num_bands; ++b) {
    const double lo = edges[static_cast<size_t>(b)];
    const double mid = edges[static_cast<size_t>(b) + 1];
    const double hi = edges[static_cast<size_t>(b) + 2];
    for (int j = 0; j < num_bins; ++j) {
      const double f = static_cast<double>(j) * sample_rate / fft_len;
      double w = 0.0;
      if (f > lo && f < mid) {
        w = (f - lo) / (mid - lo);
      } else if (f == mid) {
        w = 1.0;
      } else if (f > mid && f < hi) {
        w = (hi - f) / (hi - mid);
      }
      fb[static_cast<size_t>(b)][static_cast<size_t>(j)] = w;
    }
  }
  return fb;
}

Filterbank BarkFilterbank(int num_bins, int fft_len, int sample_rate,
                          int* num_bands_out) {
  const double bark_max = HzToBark(sample_rate / 2.0);
  const int num_bands = static_cast<int>(std::ceil(bark_max)) + 1;
  Filterbank fb(static_cast<size_t>(num_bands),
                std::vector<double>(static_cast<size_t>(num_bins), 0.0));
  for (int b = 0; b < num_bands; ++b) {
    const double center = bark_max * b / (num_bands - 1);
    for (int j = 0; j < num_bins; ++j) {
      const double f = static_cast<double>(j) * sample_rate / fft_len;
      const double d = std::abs(HzToBark(f) - center);
      if (d < 1.0) fb[static_cast<size_t>(b)][static_cast<size_t>(j)] = 1.0 - d;
    }
  }
  if (num_bands_out != nullptr) *num_bands_out = num_bands;
  return fb;
}

std::vector<double> ApplyFilterbank(const Filterbank& fb, const double* spec) {
  std::vector<double> out(fb.size());
  for (size_t b = 0; b < fb.size(); ++b) {
    double acc = 0.0;
    const std::vector<double>& w = fb[b];
    for (size_t j = 0; j < w.size(); ++j) acc += w[j] * spec[j];
    out[b] = acc;
  }
  return out;
}

}  // namespace daptain
