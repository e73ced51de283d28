// eval/stoi.cc

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

#include "eval/stoi.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "audio/resample.h"
#include "dsp/stft.h"
#include "util/error.h"

namespace daptain {

namespace {

constexpr int kRate = 10000;
constexpr int kFrame = 256;  // 25.6 ms at 10 kHz
constexpr int kHop = 128;
constexpr int kFft = 512;
constexpr int kBands = 15;
constexpr double kMinFreq = 150.0;
constexpr int kSegment = 30;  // 384 ms of frames
constexpr double kDynRange = 40.0;
constexpr double kBeta = -15.0;  // SDR clip in dB
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = 3.14159265358979323846;

// Symmetric Hann of length kFrame + 2 with the zero endpoints dropped.
std::vector<double> StoiWindow() {
  std::vector<double> w(kFrame);
  for (int i = 0; i < kFrame; ++i) {
    w[static_cast<size_t>(i)] =
        0.5 * (1.0 - std::cos(2.0 * kPi * (i + 1) / (kFrame + 1)));
  }
  return w;
}

// Full frames only: starts 0, kHop, ... while start + kFrame <= n.
int FrameCount(size_t n) {
  if (n < static_cast<size_t>(kFrame)) return 0;
  return static_cast<int>((n - kFrame) / kHop) + 1;
}

// One-third-octave band -> FFT bin ranges [lo, hi) with each band edge
// snapped to the nearest bin of the kFft-point spectrum.
std::vector<std::pair<int, int>> ThirdOctaveBands() {
  const int bins = kFft / 2 + 1;
  const double bin_hz = static_cast<double>(kRate) / kFft;
  std::vector<std::pair<int, int>> bands;
  for (int k = 0; k < kBands; ++k) {
    const double lo = kMinFreq * std::pow(2.0, (2 * k - 1) / 6.0);
    const double hi = kMinFreq * std::pow(2.0, (2 * k + 1) / 6.0);
    const int lo_bin = std::min(
        bins - 1, std::max(0, static_cast<int>(std::lround(lo / bin_hz))));
    const int hi_bin = std::min(
        bins - 1, std::max(0, static_cast<int>(std::lround(hi / bin_hz))));
    bands.emplace_back(lo_bin, hi_bin);
  }
  return bands;
}

// Band envelopes: sqrt of band-summed power per frame, [kBands x frames].
std::vector<std::vector<double>> BandEnvelopes(const std::vector<double>& x) {
  const std::vector<double> w = StoiWindow();
  const int frames = FrameCount(x.size());
  const std::vector<std::pair<int, int>> bands = ThirdOctaveBands();
  std::vector<std::vector<double>> env(
      kBands, std::vector<double>(static_cast<size_t>(frames)));
  std::vector<double> re(kFft), im(kFft);
  for (int t = 0; t < frames; ++t) {
    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
    const size_t start = static_cast<size_t>(t) * kHop;
    for (int i = 0; i < kFrame; ++i) {
      re[static_cast<size_t>(i)] =
          w[static_cast<size_t>(i)] * x[start + static_cast<size_t>(i)];
    }
    Fft(&re, &im);
    for (int b = 0; b < kBands; ++b) {
      double power = 0.0;
      for (int bin = bands[static_cast<size_t>(b)].first;
           bin < bands[static_cast<size_t>(b)].second; ++bin) {
        power += re[static_cast<size_t>(bin)] * re[static_cast<size_t>(bin)] +
                 im[static_cast<size_t>(bin)] * im[static_cast<size_t>(bin)];
      }
      env[static_cast<size_t>(b)][static_cast<size_t>(t)] = std::sqrt(power);
    }
  }
  return env;
}

}  // namespace

double Stoi(const AudioClip& clean, const AudioClip& processed) {
  if (clean.sample_rate != processed.sample_rate) {
    throw ConfigError("stoi: sample rates differ");
  }
  if (clean.samples.size() != processed.samples.size()) {
    throw ConfigError("stoi: lengths differ");
  }
  bool any = false;
  for (float v : clean.samples) any = any || v != 0.0f;
  if (!any) throw DegenerateInputError("stoi: clean clip is silent");

  const std::vector<float> xr = Resample(clean.samples, clean.sample_rate,
                                         kRate);
  const std::vector<float> yr = Resample(processed.samples,
                                         processed.sample_rate, kRate);
  std::vector<double> x(xr.begin(), xr.end());
  std::vector<double> y(yr.begin(), yr.end());

  // Silence removal: the clean energy mask selects frames of both signals,
  // which are then overlap-added back into contiguous signals.
  const std::vector<double> w = StoiWindow();
  const int frames = FrameCount(x.size());
  if (frames == 0) throw DegenerateInputError("stoi: clip too short");
  std::vector<double> energy_db(static_cast<size_t>(frames));
  double max_db = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < frames; ++t) {
    double e = 0.0;
    const size_t start = static_cast<size_t>(t) * kHop;
    for (int i = 0; i < kFrame; ++i) {
      const double v =
          w[static_cast<size_t>(i)] * x[start + static_cast<size_t>(i)];
      e += v * v;
    }
    energy_db[static_cast<size_t>(t)] = 20.0 * std::log10(std::sqrt(e) + kEps);
    max_db = std::max(max_db, energy_db[static_cast<size_t>(t)]);
  }
  std::vector<int> kept;
  for (int t = 0; t < frames; ++t) {
    if (energy_db[static_cast<size_t>(t)] > max_db - kDynRange) kept.push_back(t);
  }
  const size_t sil_len =
      static_cast<size_t>(kept.size() - 1) * kHop + kFrame;
  std::vector<double> x_sil(sil_len, 0.0), y_sil(sil_len, 0.0);
  for (size_t j = 0; j < kept.size(); ++j) {
    const size_t src = static_cast<size_t>(kept[j]) * kHop;
    const size_t dst = j * kHop;
    for (int i = 0; i < kFrame; ++i) {
      x_sil[dst + static_cast<size_t>(i)] +=
          w[static_cast<size_t>(i)] * x[src + static_cast<size_t>(i)];
      y_sil[dst + static_cast<size_t>(i)] +=
          w[static_cast<size_t>(i)] * y[src + static_cast<size_t>(i)];
    }
  }

  const std::vector<std::vector<double>> xe = BandEnvelopes(x_sil);
  const std::vector<std::vector<double>> ye = BandEnvelopes(y_sil);
  const int env_frames = static_cast<int>(xe[0].size());
  if (env_frames < kSegment) {
    throw DegenerateInputError("stoi: too few frames after silence removal");
  }

  const double clip_gain = 1.0 + std::pow(10.0, -kBeta / 20.0);
  double sum = 0.0;
  int count = 0;
  std::vector<double> xs(kSegment), ys(kSegment);
  for (int m = kSegment; m <= env_frames; ++m) {
    for (int b = 0; b < kBands; ++b) {
      double xn = 0.0, yn = 0.0;
      for (int i = 0; i < kSegment; ++i) {
        xs[static_cast<size_t>(i)] =
            xe[static_cast<size_t>(b)][static_cast<size_t>(m - kSegment + i)];
        ys[static_cast<size_t>(i)] =
            ye[static_cast<size_t>(b)][static_cast<size_t>(m - kSegment + i)];
        xn += xs[static_cast<size_t>(i)] * xs[static_cast<size_t>(i)];
        yn += ys[static_cast<size_t>(i)] * ys[static_cast<size_t>(i)];
      }
      const double alpha = std::sqrt(xn) / (std::sqrt(yn) + kEps);
      double xm = 0.0, ym = 0.0;
      for (int i = 0; i < kSegment; ++i) {
        ys[static_cast<size_t>(i)] =
            std::min(alpha * ys[static_cast<size_t>(i)],
                     clip_gain * xs[static_cast<size_t>(i)]);
        xm += xs[static_cast<size_t>(i)];
        ym += ys[static_cast<size_t>(i)];
      }
      xm /= kSegment;
      ym /= kSegment;
      double dot = 0.0, xd = 0.0, yd = 0.0;
      for (int i = 0; i < kSegment; ++i) {
        const double a = xs[static_cast<size_t>(i)] - xm;
        const double c = ys[static_cast<size_t>(i)] - ym;
        dot += a * c;
        xd += a * a;
        yd += c * c;
      }
      sum += dot / ((std::sqrt(xd) + kEps) * (std::sqrt(yd) + kEps));
      ++count;
    }
  }
  return std::clamp(sum / count, 0.0, 1.0);
}

}  // namespace daptain
