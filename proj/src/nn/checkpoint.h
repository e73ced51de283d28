// nn/checkpoint.h

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

#ifndef DAPTAIN_NN_CHECKPOINT_H_
#define DAPTAIN_NN_CHECKPOINT_H_

#include <string>
#include <vector>

#include "nn/tensor.h"

namespace daptain {

// Serialized named-tensor container: magic "VCAE1", format version u8, then
// per tensor [name_len u16, name, rank u8, dims u32 x rank, dtype u8
// (0 = f32), f32 payload], all little-endian, closed by a CRC32 of every
// preceding byte.  Record order is preserved.
struct CheckpointRecord {
  std::string name;
  Tensor<float> tensor;
};

// Throws IoError on filesystem failures and ConfigError on records the
// format cannot carry (oversize names, ranks above 255).
void WriteCheckpoint(const std::string& path,
                     const std::vector<CheckpointRecord>& records);

// Throws IoError when the file cannot be read and IntegrityError on any
// container violation: bad magic or version, truncation, unknown dtype, or a
// CRC mismatch.
std::vector<CheckpointRecord> ReadCheckpoint(const std::string& path);

}  // namespace daptain

#endif  // DAPTAIN_NN_CHECKPOINT_H_
