// audio/mix.cc

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

#include "audio/mix.h"

#include <cmath>

#include "util/error.h"

namespace daptain {

double Rms(const std::vector<float>& x) {
  if (x.empty()) return 0.0;
  double acc = 0.0;
  for (float v : x) acc += static_cast<double>(v) * v;
  return std::sqrt(acc / static_cast<double>(x.size()));
}

MixResult MixAtSnr(const std::vector<float>& clean,
                   const std::vector<float>& noise, double snr_db) {
  if (clean.empty()) throw DegenerateInputError("mix: empty clean signal");
  if (noise.size() < clean.size()) {
    throw DegenerateInputError("mix: noise segment shorter than clean signal");
  }

  double clean_sq = 0.0;
  double noise_sq = 0.0;
  for (size_t i = 0; i < clean.size(); ++i) {
    clean_sq += static_cast<double>(clean[i]) * clean[i];
    noise_sq += static_cast<double>(noise[i]) * noise[i];
  }
  if (clean_sq <= 0.0) throw DegenerateInputError("mix: silent clean signal");
  if (noise_sq <= 0.0) throw DegenerateInputError("mix: silent noise segment");

  const double rms_clean = std::sqrt(clean_sq / clean.size());
  const double rms_noise = std::sqrt(noise_sq / clean.size());
  const double g = rms_clean / (rms_noise * std::pow(10.0, snr_db / 20.0));

  MixResult out;
  out.noise_gain = g;
  out.mixture.resize(clean.size());
  for (size_t i = 0; i < clean.size(); ++i) {
    out.mixture[i] =
        clean[i] + static_cast<float>(g * static_cast<double>(noise[i]));
  }
  out.achieved_snr_db = 10.0 * std::log10(clean_sq / (g * g * noise_sq));
  return out;
}

std::pair<std::vector<float>, std::vector<float>> SplitNoise(
    const std::vector<float>& noise) {
  const size_t first = (noise.size() + 1) / 2;
  return {std::vector<float>(noise.begin(), noise.begin() + first),
          std::vector<float>(noise.begin() + first, noise.end())};
}

}  // namespace daptain
