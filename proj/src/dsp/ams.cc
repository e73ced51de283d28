// dsp/ams.cc

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

#include "dsp/ams.h"

#include <cmath>

#include "dsp/stft.h"

namespace daptain {

namespace {

constexpr int kEnvWin = 128;
constexpr int kEnvHop = 64;
constexpr int kDecim = 4;
constexpr double kEnvRate = 16000.0 / kDecim;
constexpr double kFirstCenterHz = 15.6;
constexpr double kLastCenterHz = 400.0;
constexpr double kLogFloor = 1e-10;

// Band weights over the 65 envelope-DFT bins, built once per call.
std::vector<std::vector<double>> BandWeights() {
  const std::vector<double> c = AmsBandCenters();
  const int num_bins = kEnvWin / 2 + 1;
  const double bin_hz = kEnvRate / kEnvWin;
  const double upper = c[kAmsBands - 1] * (c[1] / c[0]);
  std::vector<std::vector<double>> w(
      kAmsBands, std::vector<double>(static_cast<size_t>(num_bins), 0.0));
  for (int j = 0; j < num_bins; ++j) {
    const double f = j * bin_hz;
    // First band keeps weight 1 from DC to its center, then tapers; this is
    // where near-DC modulation (slower than the first center) is pooled.
    if (f <= c[0]) {
      w[0][static_cast<size_t>(j)] = 1.0;
    } else if (f < c[1]) {
      w[0][static_cast<size_t>(j)] = (c[1] - f) / (c[1] - c[0]);
    }
    for (int b = 1; b < kAmsBands; ++b) {
      const double lo = c[static_cast<size_t>(b) - 1];
      const double mid = c[static_cast<size_t>(b)];
      const double hi = (b + 1 < kAmsBands) ? c[static_cast<size_t>(b) + 1] : upper;
      double v = 0.0;
      if (f > lo && f < mid) {
        v = (f - lo) / (mid - lo);
      } else if (f == mid) {
        v = 1.0;
      } else if (f > mid && f < hi) {
        v = (hi - f) / (hi - mid);
      }
      w[static_cast<size_t>(b)][static_cast<size_t>(j)] = v;
    }
  }
  // Narrow low bands can miss every DFT bin; snap those to the nearest bin
  // so no output dimension is stuck at the log floor.
  for (int b = 0; b < kAmsBands; ++b) {
    double total = 0.0;
    for (int j = 0; j < num_bins; ++j) total += w[static_cast<size_t>(b)][static_cast<size_t>(j)];
    if (total == 0.0) {
      const int j = static_cast<int>(std::lround(c[static_cast<size_t>(b)] / bin_hz));
      w[static_cast<size_t>(b)][static_cast<size_t>(j)] = 1.0;
    }
  }
  return w;
}

}  // namespace

std::vector<double> AmsBandCenters() {
  std::vector<double> c(kAmsBands);
  const double ratio =
      std::pow(kLastCenterHz / kFirstCenterHz, 1.0 / (kAmsBands - 1));
  for (int b = 0; b < kAmsBands; ++b) {
    c[static_cast<size_t>(b)] = kFirstCenterHz * std::pow(ratio, b);
  }
  return c;
}

std::vector<std::vector<double>> AmsFeatures(const float* x, size_t n) {
  // Full-wave rectified envelope at 4 kHz: block average of |x| over 4
  // samples, trailing partial block dropped.
  const size_t n_env = n / kDecim;
  std::vector<float> env(n_env > 0 ? n_env : 1, 0.0f);
  for (size_t i = 0; i < n_env; ++i) {
    double acc = 0.0;
    for (int k = 0; k < kDecim; ++k) {
      acc += std::abs(static_cast<double>(x[i * kDecim + k]));
    }
    env[i] = static_cast<float>(acc / kDecim);
  }
  if (env.size() < static_cast<size_t>(kEnvWin)) env.resize(kEnvWin, 0.0f);

  const Stft spec = ComputeStft(env.data(), env.size(), kEnvWin, kEnvHop, kEnvWin);
  const std::vector<std::vector<double>> weights = BandWeights();

  std::vector<std::vector<double>> out(
      static_cast<size_t>(spec.num_frames),
      std::vector<double>(kAmsBands, 0.0));
  std::vector<double> power(static_cast<size_t>(spec.num_bins));
  for (int f = 0; f < spec.num_frames; ++f) {
    for (int j = 0; j < spec.num_bins; ++j) {
      const double m = spec.at(f, j);
      power[static_cast<size_t>(j)] = m * m;
    }
    for (int b = 0; b < kAmsBands; ++b) {
      double acc = 0.0;
      const std::vector<double>& wb = weights[static_cast<size_t>(b)];
      for (int j = 0; j < spec.num_bins; ++j) {
        acc += wb[static_cast<size_t>(j)] * power[static_cast<size_t>(j)];
      }
      out[static_cast<size_t>(f)][static_cast<size_t>(b)] =
          std::log10(acc > kLogFloor ? acc : kLogFloor);
    }
  }
  return out;
}

}  // namespace daptain
