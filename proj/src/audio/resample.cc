// audio/resample.cc

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

#include "audio/resample.h"

#include <cmath>
#include <numeric>

#include "util/error.h"

namespace daptain {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Zeroth-order modified Bessel function, power series.
double BesselI0(double x) {
  double sum = 1.0;
  double term = 1.0;
  double half_x = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

double Sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  double px = kPi * x;
  return std::sin(px) / px;
}

}  // namespace

std::vector<float> Resample(const std::vector<float>& in, int src_rate,
                            int dst_rate) {
  if (src_rate <= 0 || dst_rate <= 0) {
    throw ConfigError("resample rates must be positive");
  }
  if (src_rate == dst_rate) return in;
  if (in.empty()) return {};

  const int g = std::gcd(src_rate, dst_rate);
  const int64_t up = dst_rate / g;    // output samples per...
  const int64_t down = src_rate / g;  // ...this many input samples

  const int64_t out_len = static_cast<int64_t>(
      std::llround(static_cast<double>(in.size()) * dst_rate / src_rate));

  // Anti-alias/anti-image cutoff at the narrower Nyquist, expressed as a
  // fraction of the input rate.
  const double cutoff = 0.5 * std::min(1.0, static_cast<double>(up) / down);
  // Kernel half width in input samples; widened when downsampling so the
  // transition band stays proportional.
  const double half_width = 24.0 * std::max(1.0, static_cast<double>(down) / up);
  const double beta = 8.0;
  const double i0_beta = BesselI0(beta);

  std::vector<float> out(static_cast<size_t>(out_len));
  const int64_t n_in = static_cast<int64_t>(in.size());
  for (int64_t n = 0; n < out_len; ++n) {
    // Input-time position of this output sample.
    const double center = static_cast<double>(n) * down / up;
    const int64_t k_lo = static_cast<int64_t>(std::ceil(center - half_width));
    const int64_t k_hi = static_cast<int64_t>(std::floor(center + half_width));
    double acc = 0.0;
    for (int64_t k = std::max<int64_t>(0, k_lo);
         k <= std::min(n_in - 1, k_hi); ++k) {
      const double t = center - static_cast<double>(k);
      const double u = t / half_width;
      const double arg = std::max(0.0, 1.0 - u * u);
      const double window = BesselI0(beta * std::sqrt(arg)) / i0_beta;
      acc += static_cast<double>(in[static_cast<size_t>(k)]) * 2.0 * cutoff *
             Sinc(2.0 * cutoff * t) * window;
    }
    out[static_cast<size_t>(n)] = static_cast<float>(acc);
  }
  return out;
}

AudioClip Resample(const AudioClip& clip, int dst_rate) {
  AudioClip out;
  out.sample_rate = dst_rate;
  out.samples = Resample(clip.samples, clip.sample_rate, dst_rate);
  return out;
}

}  // namespace daptain
