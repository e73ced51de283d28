// vcae/arch.cc

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

#include "vcae/arch.h"

#include <string>

#include "util/error.h"

namespace daptain {

VcaeArchitecture DefaultVcaeArchitecture() {
  VcaeArchitecture a;
  a.input_len = 1000;
  a.output_len = 600;
  a.latent_dim = 660;
  a.kernel = 31;
  a.encoder = {
      {64, 1, false, false},  {64, 2, false, false},  {128, 2, false, false},
      {128, 2, false, false}, {256, 2, false, false}, {256, 2, false, false},
      {512, 1, false, true},
  };
  a.decoder = {
      {512, 1, false, false}, {256, 1, true, false}, {256, 1, true, false},
      {128, 1, true, false},  {128, 1, true, false}, {64, 1, true, false},
      {64, 1, false, false},
  };
  return a;
}

void ValidateArchitecture(const VcaeArchitecture& a) {
  if (a.input_len < 1 || a.output_len < 1 || a.latent_dim < 1) {
    throw ConfigError("vcae arch: sizes must be positive");
  }
  if (a.kernel < 1 || a.kernel % 2 == 0) {
    throw ConfigError("vcae arch: kernel length must be odd and positive");
  }
  if (a.encoder.empty() || a.decoder.empty()) {
    throw ConfigError("vcae arch: encoder and decoder need at least one stage");
  }
  for (const ConvStage& s : a.encoder) {
    if (s.filters < 1) throw ConfigError("vcae arch: filters must be positive");
    if (s.stride != 1 && s.stride != 2) {
      throw ConfigError("vcae arch: encoder stride must be 1 or 2");
    }
    if (s.upsample) {
      throw ConfigError("vcae arch: encoder stages cannot upsample");
    }
  }
  for (const ConvStage& s : a.decoder) {
    if (s.filters < 1) throw ConfigError("vcae arch: filters must be positive");
    if (s.stride != 1) {
      throw ConfigError("vcae arch: decoder stages must keep stride 1");
    }
  }
  const int final_len = DecoderLengths(a).back();
  if (final_len < a.output_len || (final_len - a.output_len) % 2 != 0) {
    throw ConfigError("vcae arch: decoder length " + std::to_string(final_len) +
                      " cannot be center-cropped to " +
                      std::to_string(a.output_len));
  }
}

std::vector<int> EncoderLengths(const VcaeArchitecture& a) {
  std::vector<int> lens{a.input_len};
  for (const ConvStage& s : a.encoder) {
    lens.push_back((lens.back() + s.stride - 1) / s.stride);
  }
  return lens;
}

int EncoderFlatDim(const VcaeArchitecture& a) {
  return a.encoder.back().filters * EncoderLengths(a).back();
}

std::vector<int> DecoderLengths(const VcaeArchitecture& a) {
  std::vector<int> lens{EncoderLengths(a).back()};
  for (const ConvStage& s : a.decoder) {
    lens.push_back(s.upsample ? 2 * lens.back() : lens.back());
  }
  return lens;
}

}  // namespace daptain
