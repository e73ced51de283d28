// util/binio.h

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

#ifndef DAPTAIN_UTIL_BINIO_H_
#define DAPTAIN_UTIL_BINIO_H_

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace daptain {

// Little-endian append/read helpers used by the serialized containers.  The
// build targets little-endian hosts; memcpy keeps the accesses alignment
// safe.

inline void PutU8(std::vector<uint8_t>* out, uint8_t v) { out->push_back(v); }

inline void PutU16(std::vector<uint8_t>* out, uint16_t v) {
  out->push_back(static_cast<uint8_t>(v & 0xFF));
  out->push_back(static_cast<uint8_t>(v >> 8));
}

inline void PutU32(std::vector<uint8_t>* out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<uint8_t>(v >> (8 * i)));
}

inline void PutF32(std::vector<uint8_t>* out, float v) {
  uint32_t bits = 0;
  std::memcpy(&bits, &v, 4);
  PutU32(out, bits);
}

inline void PutBytes(std::vector<uint8_t>* out, const void* p, size_t n) {
  const uint8_t* b = static_cast<const uint8_t*>(p);
  out->insert(out->end(), b, b + n);
}

// Cursor over a byte buffer; callers check Remaining() before reads.
class ByteReader {
 public:
  ByteReader(const uint8_t* data, size_t len) : p_(data), len_(len), pos_(0) {}
  size_t Remaining() const { return len_ - pos_; }
  size_t pos() const { return pos_; }

  uint8_t U8() { return p_[pos_++]; }

  uint16_t U16() {
    uint16_t v = static_cast<uint16_t>(p_[pos_]) |
                 static_cast<uint16_t>(p_[pos_ + 1]) << 8;
    pos_ += 2;
    return v;
  }

  uint32_t U32() {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(p_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }

  float F32() {
    uint32_t bits = U32();
    float v = 0;
    std::memcpy(&v, &bits, 4);
    return v;
  }

  std::string Str(size_t n) {
    std::string s(reinterpret_cast<const char*>(p_ + pos_), n);
    pos_ += n;
    return s;
  }

  void Bytes(void* dst, size_t n) {
    std::memcpy(dst, p_ + pos_, n);
    pos_ += n;
  }

 private:
  const uint8_t* p_;
  size_t len_;
  size_t pos_;
};

}  // namespace daptain

#endif  // DAPTAIN_UTIL_BINIO_H_
