// vcae/model.h

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

#ifndef DAPTAIN_VCAE_MODEL_H_
#define DAPTAIN_VCAE_MODEL_H_

#include <cstdint>
#include <string>

#include "nn/params.h"
#include "nn/tensor.h"
#include "vcae/arch.h"

namespace daptain {

// Variance-constrained autoencoder parameters with gradient-free forward
// passes.  Training wires the same parameter store into graphs through the
// builder functions.
class VcaeModel {
 public:
  VcaeModel(const VcaeArchitecture& arch, uint64_t seed);

  // blocks [n, input_len] -> latents [n, latent_dim].
  Tensor<float> Encode(const Tensor<float>& blocks) const;

  // latents [n, latent_dim] -> reconstructed centers [n, output_len].
  Tensor<float> Decode(const Tensor<float>& latents) const;

  const VcaeArchitecture& arch() const { return arch_; }
  ParamStore<float>& params() { return ps_; }
  const ParamStore<float>& params() const { return ps_; }

 private:
  VcaeArchitecture arch_;
  ParamStore<float> ps_;
};

// Checkpoint with a leading architecture record followed by the parameters
// in creation order.  Load rebuilds the model and refuses parameter lists
// that do not match the recorded architecture.
void SaveVcae(const std::string& path, const VcaeModel& model);
VcaeModel LoadVcae(const std::string& path);

}  // namespace daptain

#endif  // DAPTAIN_VCAE_MODEL_H_
