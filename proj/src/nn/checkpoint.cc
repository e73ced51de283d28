// nn/checkpoint.cc

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

#include "nn/checkpoint.h"

#include <cstdio>
#include <limits>

#include "util/binio.h"
#include "util/crc32.h"
#include "util/error.h"

namespace daptain {

namespace {

constexpr char kMagic[5] = {'V', 'C', 'A', 'E', '1'};
constexpr uint8_t kVersion = 1;
constexpr uint8_t kDtypeF32 = 0;

}  // namespace

void WriteCheckpoint(const std::string& path,
                     const std::vector<CheckpointRecord>& records) {
  std::vector<uint8_t> out;
  PutBytes(&out, kMagic, sizeof(kMagic));
  PutU8(&out, kVersion);
  for (const CheckpointRecord& rec : records) {
    if (rec.name.empty() ||
        rec.name.size() > std::numeric_limits<uint16_t>::max()) {
      throw ConfigError("checkpoint: tensor name length out of range: " +
                        rec.name);
    }
    if (rec.tensor.rank() > 255) {
      throw ConfigError("checkpoint: tensor rank above 255: " + rec.name);
    }
    PutU16(&out, static_cast<uint16_t>(rec.name.size()));
    PutBytes(&out, rec.name.data(), rec.name.size());
    PutU8(&out, static_cast<uint8_t>(rec.tensor.rank()));
    for (int d : rec.tensor.shape) PutU32(&out, static_cast<uint32_t>(d));
    PutU8(&out, kDtypeF32);
    for (float v : rec.tensor.v) PutF32(&out, v);
  }
  PutU32(&out, Crc32(out.data(), out.size()));

  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) throw IoError("cannot open for writing: " + path);
  const size_t written = std::fwrite(out.data(), 1, out.size(), f);
  std::fclose(f);
  if (written != out.size()) throw IoError("short write: " + path);
}

std::vector<CheckpointRecord> ReadCheckpoint(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (f == nullptr) throw IoError("cannot open for reading: " + path);
  std::fseek(f, 0, SEEK_END);
  const long size = std::ftell(f);
  std::fseek(f, 0, SEEK_SET);
  std::vector<uint8_t> buf(size > 0 ? static_cast<size_t>(size) : 0);
  if (!buf.empty() && std::fread(buf.data(), 1, buf.size(), f) != buf.size()) {
    std::fclose(f);
    throw IoError("short read: " + path);
  }
  std::fclose(f);

  if (buf.size() < sizeof(kMagic) + 1 + 4) {
    throw IntegrityError("checkpoint too short: " + path);
  }
  const size_t body = buf.size() - 4;
  {
    ByteReader tail(buf.data() + body, 4);
    if (tail.U32() != Crc32(buf.data(), body)) {
      throw IntegrityError("checkpoint CRC mismatch: " + path);
    }
  }
  ByteReader r(buf.data(), body);
  if (r.Str(sizeof(kMagic)) != std::string(kMagic, sizeof(kMagic))) {
    throw IntegrityError("checkpoint magic mismatch: " + path);
  }
  if (r.U8() != kVersion) {
    throw IntegrityError("checkpoint version unsupported: " + path);
  }
  std::vector<CheckpointRecord> records;
  while (r.Remaining() > 0) {
    if (r.Remaining() < 2) throw IntegrityError("checkpoint truncated: " + path);
    const size_t name_len = r.U16();
    if (r.Remaining() < name_len + 1) {
      throw IntegrityError("checkpoint truncated: " + path);
    }
    CheckpointRecord rec;
    rec.name = r.Str(name_len);
    const int rank = r.U8();
    if (r.Remaining() < static_cast<size_t>(rank) * 4 + 1) {
      throw IntegrityError("checkpoint truncated: " + path);
    }
    std::vector<int> shape(static_cast<size_t>(rank));
    uint64_t numel = 1;
    for (int& d : shape) {
      const uint32_t v = r.U32();
      if (v == 0 || v > static_cast<uint32_t>(std::numeric_limits<int>::max())) {
        throw IntegrityError("checkpoint dimension out of range: " + path);
      }
      d = static_cast<int>(v);
      numel *= v;
      if (numel > buf.size()) {
        throw IntegrityError("checkpoint truncated: " + path);
      }
    }
    if (r.U8() != kDtypeF32) {
      throw IntegrityError("checkpoint dtype unsupported: " + path);
    }
    if (r.Remaining() < numel * 4) {
      throw IntegrityError("checkpoint truncated: " + path);
    }
    rec.tensor = Tensor<float>(std::move(shape));
    for (float& v : rec.tensor.v) v = r.F32();
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace daptain
