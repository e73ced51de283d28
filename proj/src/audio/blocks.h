// audio/blocks.h

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

#ifndef DAPTAIN_AUDIO_BLOCKS_H_
#define DAPTAIN_AUDIO_BLOCKS_H_

#include <cstdint>
#include <vector>

namespace daptain {

// Fixed-length analysis blocks whose center regions tile the original signal
// exactly.  The signal is reflect-padded by (block_len - hop) / 2 on each
// side; block k starts at padded offset k * hop, and its center region of
// `hop` samples covers original samples [k * hop, (k + 1) * hop).  The tail
// block is zero-padded past the reflected end.
struct BlockSet {
  int block_len = 0;
  int hop = 0;
  int64_t original_len = 0;
  // blocks.size() == ceil(original_len / hop); each entry has block_len
  // samples.
  std::vector<std::vector<float>> blocks;
};

// Requires block_len > hop > 0 with (block_len - hop) even, and a non-empty
// signal.
BlockSet FrameBlocks(const std::vector<float>& x, int block_len, int hop);

// Concatenates the center regions and trims to the original length.
// FrameBlocks followed by AssembleCenters is the identity for every input.
std::vector<float> AssembleCenters(const BlockSet& blocks);

// Center region of one block (hop samples starting at (block_len - hop) / 2).
std::vector<float> BlockCenter(const std::vector<float>& block, int block_len,
                               int hop);

}  // namespace daptain

#endif  // DAPTAIN_AUDIO_BLOCKS_H_
