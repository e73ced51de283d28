// dsp/dscc.cc

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

#include "dsp/dscc.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dsp/filterbank.h"
#include "dsp/stft.h"
#include "util/error.h"

namespace daptain {

namespace {

constexpr int kRate = 16000;
constexpr int kWin = 512;
constexpr int kHop = 256;
constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::vector<std::vector<double>> MelSpectra(const float* x, size_t n) {
  const Stft spec = ComputeStft(x, n, kWin, kHop, kWin);
  const Filterbank fb =
      MelFilterbank(kDsccMelBands, spec.num_bins, kWin, kRate, 0.0, kRate / 2.0);
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<size_t>(spec.num_frames));
  std::vector<double> mag(static_cast<size_t>(spec.num_bins));
  for (int f = 0; f < spec.num_frames; ++f) {
    for (int j = 0; j < spec.num_bins; ++j) {
      mag[static_cast<size_t>(j)] = spec.at(f, j);
    }
    out.push_back(ApplyFilterbank(fb, mag.data()));
  }
  return out;
}

std::vector<std::vector<double>> DeltaFrames(
    const std::vector<std::vector<double>>& frames) {
  const int t_max = static_cast<int>(frames.size());
  if (t_max == 0) return {};
  const size_t dim = frames[0].size();
  auto clamp = [t_max](int t) { return std::min(std::max(t, 0), t_max - 1); };
  std::vector<std::vector<double>> out(static_cast<size_t>(t_max),
                                       std::vector<double>(dim));
  for (int t = 0; t < t_max; ++t) {
    const std::vector<double>& p1 = frames[static_cast<size_t>(clamp(t + 1))];
    const std::vector<double>& m1 = frames[static_cast<size_t>(clamp(t - 1))];
    const std::vector<double>& p2 = frames[static_cast<size_t>(clamp(t + 2))];
    const std::vector<double>& m2 = frames[static_cast<size_t>(clamp(t - 2))];
    for (size_t d = 0; d < dim; ++d) {
      out[static_cast<size_t>(t)][d] =
          ((p1[d] - m1[d]) + 2.0 * (p2[d] - m2[d])) / 10.0;
    }
  }
  return out;
}

double InverseNormalCdf(double p) {
  if (p <= 0.0 || p >= 1.0) {
    throw DegenerateInputError("inverse normal cdf: p outside (0, 1)");
  }
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
         q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

std::vector<std::vector<double>> GaussianizeColumns(
    const std::vector<std::vector<double>>& frames) {
  const size_t t_max = frames.size();
  if (t_max == 0) return {};
  const size_t dim = frames[0].size();
  std::vector<std::vector<double>> out(t_max, std::vector<double>(dim));
  std::vector<size_t> order(t_max);
  std::vector<double> rank(t_max);
  for (size_t d = 0; d < dim; ++d) {
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) {
      return frames[i][d] < frames[j][d];
    });
    // Midranks: tied runs share the average of their 1-based positions.
    size_t i = 0;
    while (i < t_max) {
      size_t j = i;
      while (j + 1 < t_max &&
             frames[order[j + 1]][d] == frames[order[i]][d]) {
        ++j;
      }
      const double mid = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
      for (size_t k = i; k <= j; ++k) rank[order[k]] = mid;
      i = j + 1;
    }
    for (size_t t = 0; t < t_max; ++t) {
      out[t][d] = InverseNormalCdf((rank[t] - 0.5) / static_cast<double>(t_max));
    }
  }
  return out;
}

namespace {

// Orthonormal DCT-II over the band axis, truncated to 13 coefficients.
std::vector<std::vector<double>> CosineTransform(
    const std::vector<std::vector<double>>& frames) {
  const int bands = kDsccMelBands;
  const double s0 = std::sqrt(1.0 / bands);
  const double sk = std::sqrt(2.0 / bands);
  std::vector<std::vector<double>> out(frames.size(),
                                       std::vector<double>(kDsccCoeffs));
  for (size_t t = 0; t < frames.size(); ++t) {
    for (int k = 0; k < kDsccCoeffs; ++k) {
      double acc = 0.0;
      for (int b = 0; b < bands; ++b) {
        acc += frames[t][static_cast<size_t>(b)] *
               std::cos(kPi * k * (2.0 * b + 1.0) / (2.0 * bands));
      }
      out[t][static_cast<size_t>(k)] = (k == 0 ? s0 : sk) * acc;
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<double>> DsccFromMel(
    const std::vector<std::vector<double>>& mel) {
  return CosineTransform(GaussianizeColumns(DeltaFrames(mel)));
}

std::vector<std::vector<double>> DeltaCepstraFromMel(
    const std::vector<std::vector<double>>& mel) {
  return CosineTransform(DeltaFrames(mel));
}

std::vector<std::vector<double>> Dscc(const float* x, size_t n) {
  const std::vector<std::vector<double>> mel = MelSpectra(x, n);
  if (mel.size() < 5) {
    throw DegenerateInputError("dscc: needs at least 5 frames");
  }
  return DsccFromMel(mel);
}

}  // namespace daptain
