// audio/blocks.cc

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

#include "audio/blocks.h"

#include "util/error.h"

namespace daptain {

namespace {

// Mirror indexing without edge repetition; out-of-range positions past the
// single reflection fold to the edge for very short signals.
float ReflectAt(const std::vector<float>& x, int64_t i) {
  const int64_t n = static_cast<int64_t>(x.size());
  if (n == 1) return x[0];
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
  }
  return x[static_cast<size_t>(i)];
}

}  // namespace

BlockSet FrameBlocks(const std::vector<float>& x, int block_len, int hop) {
  if (hop <= 0 || block_len <= hop) {
    throw ConfigError("frame blocks: need block_len > hop > 0");
  }
  if ((block_len - hop) % 2 != 0) {
    throw ConfigError("frame blocks: block_len - hop must be even");
  }
  if (x.empty()) throw DegenerateInputError("frame blocks: empty signal");

  const int pad = (block_len - hop) / 2;
  const int64_t n = static_cast<int64_t>(x.size());
  const int64_t n_blocks = (n + hop - 1) / hop;

  BlockSet out;
  out.block_len = block_len;
  out.hop = hop;
  out.original_len = n;
  out.blocks.assign(static_cast<size_t>(n_blocks),
                    std::vector<float>(static_cast<size_t>(block_len), 0.0f));
  for (int64_t b = 0; b < n_blocks; ++b) {
    std::vector<float>& block = out.blocks[static_cast<size_t>(b)];
    for (int j = 0; j < block_len; ++j) {
      // Position in the original signal; the reflected prefix occupies
      // [-pad, 0).  Past n - 1 + pad the tail stays zero.
      const int64_t pos = b * hop + j - pad;
      if (pos < n + pad) block[static_cast<size_t>(j)] = ReflectAt(x, pos);
    }
  }
  return out;
}

std::vector<float> AssembleCenters(const BlockSet& blocks) {
  const int lead = (blocks.block_len - blocks.hop) / 2;
  std::vector<float> out;
  out.reserve(static_cast<size_t>(blocks.blocks.size()) * blocks.hop);
  for (const std::vector<float>& block : blocks.blocks) {
    out.insert(out.end(), block.begin() + lead, block.begin() + lead + blocks.hop);
  }
  out.resize(static_cast<size_t>(blocks.original_len));
  return out;
}

std::vector<float> BlockCenter(const std::vector<float>& block, int block_len,
                               int hop) {
  const int lead = (block_len - hop) / 2;
  return std::vector<float>(block.begin() + lead, block.begin() + lead + hop);
}

}  // namespace daptain
