// dsp/stft.cc

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

#include "dsp/stft.h"

#include <cmath>

#include "util/error.h"

namespace daptain {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool IsPow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

void Fft(std::vector<double>* re_p, std::vector<double>* im_p) {
  std::vector<double>& re = *re_p;
  std::vector<double>& im = *im_p;
  const size_t n = re.size();
  if (!IsPow2(static_cast<int>(n)) || im.size() != n) {
    throw ConfigError("fft: size must be a power of two");
  }
  // Bit reversal permutation.
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) {
      std::swap(re[i], re[j]);
      std::swap(im[i], im[j]);
    }
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / static_cast<double>(len);
    const double wr = std::cos(ang);
    const double wi = std::sin(ang);
    for (size_t i = 0; i < n; i += len) {
      double cr = 1.0, ci = 0.0;
      for (size_t k = 0; k < len / 2; ++k) {
        const double ur = re[i + k];
        const double ui = im[i + k];
        const double vr = re[i + k + len / 2] * cr - im[i + k + len / 2] * ci;
        const double vi = re[i + k + len / 2] * ci + im[i + k + len / 2] * cr;
        re[i + k] = ur + vr;
        im[i + k] = ui + vi;
        re[i + k + len / 2] = ur - vr;
        im[i + k + len / 2] = ui - vi;
        const double ncr = cr * wr - ci * wi;
        ci = cr * wi + ci * wr;
        cr = ncr;
      }
    }
  }
}

Stft ComputeStft(const float* x, int64_t n, int win_len, int hop, int fft_len) {
  if (win_len <= 0 || hop <= 0 || !IsPow2(fft_len) || fft_len < win_len) {
    throw ConfigError("stft: invalid window/hop/fft geometry");
  }
  if (n < win_len) {
    throw DegenerateInputError("stft: signal shorter than one window");
  }

  Stft out;
  out.win_len = win_len;
  out.hop = hop;
  out.fft_len = fft_len;
  out.num_bins = fft_len / 2 + 1;
  out.num_frames =
      1 + static_cast<int>((n - win_len + hop - 1) / hop);
  out.mag.assign(static_cast<size_t>(out.num_frames) * out.num_bins, 0.0);

  std::vector<double> window(static_cast<size_t>(win_len));
  for (int i = 0; i < win_len; ++i) {
    window[static_cast<size_t>(i)] =
        0.5 - 0.5 * std::cos(2.0 * kPi * i / win_len);
  }

  std::vector<double> re(static_cast<size_t>(fft_len));
  std::vector<double> im(static_cast<size_t>(fft_len));
  for (int f = 0; f < out.num_frames; ++f) {
    const int64_t start = static_cast<int64_t>(f) * hop;
    for (int i = 0; i < fft_len; ++i) {
      const int64_t idx = start + i;
      re[static_cast<size_t>(i)] =
          (i < win_len && idx < n)
              ? static_cast<double>(x[idx]) * window[static_cast<size_t>(i)]
              : 0.0;
      im[static_cast<size_t>(i)] = 0.0;
    }
    Fft(&re, &im);
    for (int b = 0; b < out.num_bins; ++b) {
      out.mag[static_cast<size_t>(f) * out.num_bins + b] =
          std::hypot(re[static_cast<size_t>(b)], im[static_cast<size_t>(b)]);
    }
  }
  return out;
}

Stft SpeechStft(const float* x, int64_t n, int sample_rate) {
  const int win = static_cast<int>(std::lround(0.032 * sample_rate));
  const int hop = static_cast<int>(std::lround(0.016 * sample_rate));
  int fft = 1;
  while (fft < win) fft <<= 1;
  return ComputeStft(x, n, win, hop, fft);
}

}  // namespace daptain
