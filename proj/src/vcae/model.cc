// vcae/model.cc

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

#include "vcae/model.h"

#include <utility>
#include <vector>

#include "nn/checkpoint.h"
#include "nn/graph.h"
#include "util/error.h"
#include "util/rng.h"
#include "vcae/builder.h"

namespace daptain {

namespace {

// Architecture record layout: header scalars, then each stage as
// [filters, stride, upsample, linear].  Every value is integral and far
// below the f32 exact-integer limit.
Tensor<float> ArchToMeta(const VcaeArchitecture& a) {
  std::vector<float> v{
      static_cast<float>(a.input_len),      static_cast<float>(a.output_len),
      static_cast<float>(a.latent_dim),     static_cast<float>(a.kernel),
      static_cast<float>(a.encoder.size()), static_cast<float>(a.decoder.size()),
  };
  for (const std::vector<ConvStage>* stages : {&a.encoder, &a.decoder}) {
    for (const ConvStage& s : *stages) {
      v.push_back(static_cast<float>(s.filters));
      v.push_back(static_cast<float>(s.stride));
      v.push_back(s.upsample ? 1.0f : 0.0f);
      v.push_back(s.linear ? 1.0f : 0.0f);
    }
  }
  const int len = static_cast<int>(v.size());
  return Tensor<float>({len}, std::move(v));
}

VcaeArchitecture ArchFromMeta(const Tensor<float>& t) {
  const std::vector<float>& v = t.v;
  if (t.rank() != 1 || v.size() < 6) {
    throw IntegrityError("vcae checkpoint: malformed architecture record");
  }
  VcaeArchitecture a;
  a.input_len = static_cast<int>(v[0]);
  a.output_len = static_cast<int>(v[1]);
  a.latent_dim = static_cast<int>(v[2]);
  a.kernel = static_cast<int>(v[3]);
  if (v[4] < 0.0f || v[5] < 0.0f || v[4] > 1e6f || v[5] > 1e6f) {
    throw IntegrityError("vcae checkpoint: malformed architecture record");
  }
  const size_t n_enc = static_cast<size_t>(v[4]);
  const size_t n_dec = static_cast<size_t>(v[5]);
  if (v.size() != 6 + 4 * (n_enc + n_dec)) {
    throw IntegrityError("vcae checkpoint: malformed architecture record");
  }
  size_t i = 6;
  for (std::vector<ConvStage>* stages : {&a.encoder, &a.decoder}) {
    const size_t count = stages == &a.encoder ? n_enc : n_dec;
    for (size_t s = 0; s < count; ++s, i += 4) {
      stages->push_back(ConvStage{static_cast<int>(v[i]),
                                  static_cast<int>(v[i + 1]), v[i + 2] != 0.0f,
                                  v[i + 3] != 0.0f});
    }
  }
  return a;
}

constexpr char kArchRecord[] = "meta.arch";

}  // namespace

VcaeModel::VcaeModel(const VcaeArchitecture& arch, uint64_t seed)
    : arch_(arch) {
  Rng rng(seed);
  CreateVcaeParams(arch_, &ps_, &rng);
}

Tensor<float> VcaeModel::Encode(const Tensor<float>& blocks) const {
  if (blocks.rank() != 2 || blocks.dim(1) != arch_.input_len) {
    throw ConfigError("vcae encode: input must be [n, " +
                      std::to_string(arch_.input_len) + "]");
  }
  Graph<float> g;
  const int x = g.ExternalLeaf(&blocks, nullptr);
  ParamStore<float>* ps = const_cast<ParamStore<float>*>(&ps_);
  const int z = BuildVcaeEncoder(&g, ps, arch_, x, false, nullptr);
  return g.value(z);
}

Tensor<float> VcaeModel::Decode(const Tensor<float>& latents) const {
  if (latents.rank() != 2 || latents.dim(1) != arch_.latent_dim) {
    throw ConfigError("vcae decode: input must be [n, " +
                      std::to_string(arch_.latent_dim) + "]");
  }
  Graph<float> g;
  const int z = g.ExternalLeaf(&latents, nullptr);
  ParamStore<float>* ps = const_cast<ParamStore<float>*>(&ps_);
  const int y = BuildVcaeDecoder(&g, ps, arch_, z, false, nullptr);
  return g.value(y);
}

void SaveVcae(const std::string& path, const VcaeModel& model) {
  std::vector<CheckpointRecord> records;
  records.push_back({kArchRecord, ArchToMeta(model.arch())});
  const ParamStore<float>& ps = model.params();
  for (const std::string& name : ps.names()) {
    records.push_back({name, ps.value(name)});
  }
  WriteCheckpoint(path, records);
}

VcaeModel LoadVcae(const std::string& path) {
  const std::vector<CheckpointRecord> records = ReadCheckpoint(path);
  if (records.empty() || records.front().name != kArchRecord) {
    throw IntegrityError("vcae checkpoint: missing architecture record: " +
                         path);
  }
  VcaeModel model(ArchFromMeta(records.front().tensor), 0);
  ParamStore<float>& ps = model.params();
  if (records.size() != ps.size() + 1) {
    throw IntegrityError("vcae checkpoint: parameter count mismatch: " + path);
  }
  for (size_t i = 1; i < records.size(); ++i) {
    const CheckpointRecord& rec = records[i];
    if (rec.name != ps.names()[i - 1]) {
      throw IntegrityError("vcae checkpoint: unexpected record order: " + path);
    }
    Tensor<float>& dst = ps.value(rec.name);
    if (!dst.SameShape(rec.tensor)) {
      throw IntegrityError("vcae checkpoint: shape mismatch for " + rec.name +
                           ": " + path);
    }
    dst.v = rec.tensor.v;
  }
  return model;
}

}  // namespace daptain
