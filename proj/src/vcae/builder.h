// vcae/builder.h

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

#ifndef DAPTAIN_VCAE_BUILDER_H_
#define DAPTAIN_VCAE_BUILDER_H_

#include <string>
#include <vector>

#include "nn/graph.h"
#include "nn/params.h"
#include "util/rng.h"
#include "vcae/arch.h"

namespace daptain {

// Wiring shared by the float model and the double-precision gradient checks.
// Parameter names: enc.conv<i>.{w,b}, enc.dense.{w,b}, dec.dense.{w,b},
// dec.conv<i>.{w,b}, dec.proj.{w,b}.  Creation order fixes both the random
// draws and the serialization order.

template <typename T>
void CreateVcaeParams(const VcaeArchitecture& a, ParamStore<T>* ps, Rng* rng) {
  ValidateArchitecture(a);
  int cin = 1;
  for (size_t i = 0; i < a.encoder.size(); ++i) {
    const std::string base = "enc.conv" + std::to_string(i);
    GlorotConv(&ps->Create(base + ".w", {a.encoder[i].filters, cin, a.kernel}),
               rng);
    ps->Create(base + ".b", {a.encoder[i].filters});
    cin = a.encoder[i].filters;
  }
  GlorotDense(&ps->Create("enc.dense.w", {EncoderFlatDim(a), a.latent_dim}),
              rng);
  ps->Create("enc.dense.b", {a.latent_dim});
  GlorotDense(&ps->Create("dec.dense.w", {a.latent_dim, EncoderFlatDim(a)}),
              rng);
  ps->Create("dec.dense.b", {EncoderFlatDim(a)});
  cin = a.encoder.back().filters;
  for (size_t i = 0; i < a.decoder.size(); ++i) {
    const std::string base = "dec.conv" + std::to_string(i);
    GlorotConv(&ps->Create(base + ".w", {a.decoder[i].filters, cin, a.kernel}),
               rng);
    ps->Create(base + ".b", {a.decoder[i].filters});
    cin = a.decoder[i].filters;
  }
  GlorotConv(&ps->Create("dec.proj.w", {1, cin, a.kernel}), rng);
  ps->Create("dec.proj.b", {1});
}

namespace vcae_internal {

template <typename T>
int ParamLeaf(Graph<T>* g, ParamStore<T>* ps, const std::string& name,
              bool with_grads, std::vector<int>* weight_ids) {
  const int id = g->ExternalLeaf(&ps->value(name),
                                 with_grads ? &ps->grad(name) : nullptr);
  const bool is_weight = name.size() >= 2 &&
                         name.compare(name.size() - 2, 2, ".w") == 0;
  if (is_weight && weight_ids != nullptr) weight_ids->push_back(id);
  return id;
}

template <typename T>
int ConvBlock(Graph<T>* g, ParamStore<T>* ps, const std::string& base, int x,
              const ConvStage& s, bool with_grads,
              std::vector<int>* weight_ids) {
  const int w = ParamLeaf(g, ps, base + ".w", with_grads, weight_ids);
  const int b = ParamLeaf(g, ps, base + ".b", with_grads, weight_ids);
  const int in = s.upsample ? g->Upsample2(x) : x;
  const int y = g->BiasChannel(g->Conv1d(in, w, s.stride), b);
  return s.linear ? y : g->LeakyRelu(y, static_cast<T>(0.1));
}

}  // namespace vcae_internal

// blocks [n, input_len] -> latent [n, latent_dim].  When weight_ids is
// non-null the ids of every weight leaf (biases excluded) are appended for
// the L2 term.
template <typename T>
int BuildVcaeEncoder(Graph<T>* g, ParamStore<T>* ps,
                     const VcaeArchitecture& a, int blocks, bool with_grads,
                     std::vector<int>* weight_ids) {
  using vcae_internal::ConvBlock;
  using vcae_internal::ParamLeaf;
  const int n = g->value(blocks).dim(0);
  int h = g->Reshape(blocks, {n, 1, a.input_len});
  for (size_t i = 0; i < a.encoder.size(); ++i) {
    h = ConvBlock(g, ps, "enc.conv" + std::to_string(i), h, a.encoder[i],
                  with_grads, weight_ids);
  }
  const int flat = g->Reshape(h, {n, EncoderFlatDim(a)});
  const int w = ParamLeaf(g, ps, "enc.dense.w", with_grads, weight_ids);
  const int b = ParamLeaf(g, ps, "enc.dense.b", with_grads, weight_ids);
  return g->Dense(flat, w, b);
}

// latent [n, latent_dim] -> reconstructed center [n, output_len].
template <typename T>
int BuildVcaeDecoder(Graph<T>* g, ParamStore<T>* ps,
                     const VcaeArchitecture& a, int latent, bool with_grads,
                     std::vector<int>* weight_ids) {
  using vcae_internal::ConvBlock;
  using vcae_internal::ParamLeaf;
  const int n = g->value(latent).dim(0);
  const int w = ParamLeaf(g, ps, "dec.dense.w", with_grads, weight_ids);
  const int b = ParamLeaf(g, ps, "dec.dense.b", with_grads, weight_ids);
  const int seed_len = EncoderLengths(a).back();
  int h = g->Reshape(g->Dense(latent, w, b),
                     {n, a.encoder.back().filters, seed_len});
  for (size_t i = 0; i < a.decoder.size(); ++i) {
    h = ConvBlock(g, ps, "dec.conv" + std::to_string(i), h, a.decoder[i],
                  with_grads, weight_ids);
  }
  const ConvStage proj{1, 1, false, true};
  h = ConvBlock(g, ps, "dec.proj", h, proj, with_grads, weight_ids);
  return g->Reshape(g->CropCenter(h, a.output_len), {n, a.output_len});
}

}  // namespace daptain

#endif  // DAPTAIN_VCAE_BUILDER_H_
