// vcae/data.cc

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

#include "vcae/data.h"

#include <algorithm>
#include <string>
#include <thread>
#include <utility>

#include "audio/blocks.h"
#include "audio/resample.h"
#include "audio/wav.h"
#include "dsp/features.h"
#include "util/error.h"

namespace daptain {

namespace {

constexpr int kRate = 16000;

std::vector<float> ReadAt16k(const Manifest& m, const std::string& rel) {
  AudioClip clip = ReadWav(m.Resolve(rel));
  if (clip.sample_rate != kRate) clip = Resample(clip, kRate);
  return std::move(clip.samples);
}

void AppendBlocks(const std::vector<std::vector<float>>& blocks,
                  std::vector<float>* flat) {
  for (const std::vector<float>& b : blocks) {
    flat->insert(flat->end(), b.begin(), b.end());
  }
}

// Fills rows[i] = descriptor of blocks[i] using `threads` workers; each row
// is written by exactly one worker, so the result is order-independent.
std::vector<std::vector<double>> BlockFeatures(
    const std::vector<std::vector<float>>& blocks, int threads) {
  std::vector<std::vector<double>> rows(blocks.size());
  const int workers = std::max(
      1, std::min(threads, static_cast<int>(blocks.size())));
  auto run = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      rows[i] = BlockFeatureVector(blocks[i].data(), blocks[i].size());
    }
  };
  if (workers == 1) {
    run(0, blocks.size());
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (blocks.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const size_t begin = static_cast<size_t>(w) * chunk;
      const size_t end = std::min(blocks.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }
  return rows;
}

Tensor<float> FlatTensor(std::vector<float> flat, int rows, int cols) {
  return Tensor<float>({rows, cols}, std::move(flat));
}

}  // namespace

TrainData LoadTrainData(const Manifest& source, const Manifest& target,
                        const VcaeArchitecture& arch, int threads) {
  ValidateArchitecture(arch);
  const std::vector<MixtureRecord> src_train = source.Split("train");
  const std::vector<MixtureRecord> src_val = source.Split("validation");
  const std::vector<MixtureRecord> tgt_train = target.Split("train");
  if (src_train.empty()) {
    throw ConfigError("train data: source manifest has no train split");
  }
  if (tgt_train.empty()) {
    throw ConfigError("train data: target manifest has no train split");
  }

  TrainData data;
  std::vector<std::vector<float>> src_blocks;
  std::vector<float> train_flat, target_flat;
  for (size_t rec = 0; rec < src_train.size(); ++rec) {
    const MixtureRecord& r = src_train[rec];
    const std::vector<float> noisy = ReadAt16k(source, r.mixture_path);
    const std::vector<float> clean = ReadAt16k(source, r.clean_path);
    if (noisy.size() != clean.size()) {
      throw ConfigError("train data: mixture/clean length mismatch for " +
                        r.id);
    }
    const BlockSet nb = FrameBlocks(noisy, arch.input_len, arch.output_len);
    const BlockSet cb = FrameBlocks(clean, arch.input_len, arch.output_len);
    for (size_t k = 0; k < nb.blocks.size(); ++k) {
      src_blocks.push_back(nb.blocks[k]);
      train_flat.insert(train_flat.end(), nb.blocks[k].begin(),
                        nb.blocks[k].end());
      const std::vector<float> center =
          BlockCenter(cb.blocks[k], arch.input_len, arch.output_len);
      target_flat.insert(target_flat.end(), center.begin(), center.end());
      data.train_block_ids.push_back(static_cast<int64_t>(rec) * 1000000 +
                                     static_cast<int64_t>(k));
    }
  }
  const int n_train = static_cast<int>(src_blocks.size());
  data.train_blocks = FlatTensor(std::move(train_flat), n_train, arch.input_len);
  data.train_targets =
      FlatTensor(std::move(target_flat), n_train, arch.output_len);

  std::vector<float> val_flat, val_target_flat;
  int n_val = 0;
  for (const MixtureRecord& r : src_val) {
    const std::vector<float> noisy = ReadAt16k(source, r.mixture_path);
    const std::vector<float> clean = ReadAt16k(source, r.clean_path);
    if (noisy.size() != clean.size()) {
      throw ConfigError("train data: mixture/clean length mismatch for " +
                        r.id);
    }
    const BlockSet nb = FrameBlocks(noisy, arch.input_len, arch.output_len);
    const BlockSet cb = FrameBlocks(clean, arch.input_len, arch.output_len);
    AppendBlocks(nb.blocks, &val_flat);
    for (const std::vector<float>& block : cb.blocks) {
      const std::vector<float> center =
          BlockCenter(block, arch.input_len, arch.output_len);
      val_target_flat.insert(val_target_flat.end(), center.begin(),
                             center.end());
    }
    n_val += static_cast<int>(nb.blocks.size());
  }
  if (n_val > 0) {
    data.val_blocks = FlatTensor(std::move(val_flat), n_val, arch.input_len);
    data.val_targets =
        FlatTensor(std::move(val_target_flat), n_val, arch.output_len);
  }

  std::vector<std::vector<float>> tgt_blocks;
  for (const MixtureRecord& r : tgt_train) {
    const std::vector<float> noisy = ReadAt16k(target, r.mixture_path);
    BlockSet nb = FrameBlocks(noisy, arch.input_len, arch.output_len);
    for (std::vector<float>& b : nb.blocks) tgt_blocks.push_back(std::move(b));
  }

  std::vector<std::vector<double>> src_rows = BlockFeatures(src_blocks, threads);
  std::vector<std::vector<double>> tgt_rows = BlockFeatures(tgt_blocks, threads);
  std::vector<std::vector<double>> pooled = src_rows;
  pooled.insert(pooled.end(), tgt_rows.begin(), tgt_rows.end());
  const FeatureStats stats = ComputeFeatureStats(pooled);
  for (std::vector<double>& row : src_rows) NormalizeFeature(stats, &row);
  for (std::vector<double>& row : tgt_rows) NormalizeFeature(stats, &row);

  data.source_features = MakeBatch(src_rows, 1.0f);
  data.source_features.sample_ids = data.train_block_ids;
  data.target_features = MakeBatch(tgt_rows, 0.0f);
  return data;
}

}  // namespace daptain
