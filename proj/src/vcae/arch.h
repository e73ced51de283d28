// vcae/arch.h

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

#ifndef DAPTAIN_VCAE_ARCH_H_
#define DAPTAIN_VCAE_ARCH_H_

#include <vector>

namespace daptain {

// One convolution stage.  Encoder stages may downsample by stride; decoder
// stages may be preceded by a x2 nearest-neighbor upsample.  All stages share
// the architecture's kernel length and use leaky-relu unless marked linear.
struct ConvStage {
  int filters = 0;
  int stride = 1;
  bool upsample = false;
  bool linear = false;
};

// Convolutional autoencoder over raw waveform blocks: a strided encoder to a
// dense latent, and an upsampling decoder whose output is center-cropped to
// the block's center region.
struct VcaeArchitecture {
  int input_len = 1000;
  int output_len = 600;
  int latent_dim = 660;
  int kernel = 31;
  std::vector<ConvStage> encoder;
  std::vector<ConvStage> decoder;
};

// The full-size architecture: seven encoder convolutions narrowing 1000
// samples to 512 channels of 32, a 660-dimensional latent, and a mirrored
// decoder rising back to 1024 samples before the crop to 600.
VcaeArchitecture DefaultVcaeArchitecture();

// Throws ConfigError on inconsistent stage lists or lengths that cannot be
// center-cropped to output_len.
void ValidateArchitecture(const VcaeArchitecture& a);

// Sequence lengths after each encoder stage; front entry is input_len.
std::vector<int> EncoderLengths(const VcaeArchitecture& a);

// Flattened encoder output size: final channels times final length.
int EncoderFlatDim(const VcaeArchitecture& a);

// Sequence lengths after each decoder stage; front entry is the seed length
// (the encoder's final length), back entry feeds the output projection.
std::vector<int> DecoderLengths(const VcaeArchitecture& a);

}  // namespace daptain

#endif  // DAPTAIN_VCAE_ARCH_H_
