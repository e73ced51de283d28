// audio/wav.cc

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

#include "audio/wav.h"

#include <cmath>
#include <cstdio>
#include <cstring>

#include "util/binio.h"
#include "util/error.h"
#include "util/log.h"

namespace daptain {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatIeeeFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

struct FmtChunk {
  uint16_t format = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits = 0;
};

std::vector<uint8_t> ReadAll(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (f == nullptr) throw IoError("cannot open for reading: " + path);
  std::fseek(f, 0, SEEK_END);
  long size = std::ftell(f);
  std::fseek(f, 0, SEEK_SET);
  std::vector<uint8_t> buf(size > 0 ? static_cast<size_t>(size) : 0);
  if (!buf.empty() && std::fread(buf.data(), 1, buf.size(), f) != buf.size()) {
    std::fclose(f);
    throw IoError("short read: " + path);
  }
  std::fclose(f);
  return buf;
}

}  // namespace

AudioClip ReadWav(const std::string& path) {
  std::vector<uint8_t> buf = ReadAll(path);
  if (buf.size() < 12) throw IoError("not a RIFF file (too short): " + path);
  {
    ByteReader hdr(buf.data(), 12);
    if (hdr.Str(4) != "RIFF") throw IoError("missing RIFF magic: " + path);
    hdr.U32();  // declared size; the actual buffer bounds the walk below
    if (hdr.Str(4) != "WAVE") throw IoError("missing WAVE form type: " + path);
  }

  FmtChunk fmt;
  bool have_fmt = false;
  const uint8_t* data_ptr = nullptr;
  uint32_t data_len = 0;

  size_t off = 12;
  while (off + 8 <= buf.size()) {
    ByteReader r(buf.data() + off, buf.size() - off);
    std::string id = r.Str(4);
    uint32_t len = r.U32();
    if (len > r.Remaining()) throw IoError("truncated chunk '" + id + "': " + path);
    const uint8_t* body = buf.data() + off + 8;
    if (id == "fmt ") {
      if (len < 16) throw IoError("fmt chunk too short: " + path);
      ByteReader fr(body, len);
      fmt.format = fr.U16();
      fmt.channels = fr.U16();
      fmt.sample_rate = fr.U32();
      fr.U32();  // byte rate
      fr.U16();  // block align
      fmt.bits = fr.U16();
      if (fmt.format == kFormatExtensible && len >= 40) {
        ByteReader er(body + 24, len - 24);
        er.U16();  // valid bits
        er.U32();  // channel mask
        fmt.format = er.U16();  // first two bytes of the subformat GUID
      }
      have_fmt = true;
    } else if (id == "data") {
      data_ptr = body;
      data_len = len;
    }
    off += 8 + len + (len & 1);  // chunks are word aligned
  }

  if (!have_fmt) throw IoError("missing fmt chunk: " + path);
  if (data_ptr == nullptr) throw IoError("missing data chunk: " + path);
  if (fmt.channels != 1) {
    throw IoError("only mono input is supported (got " +
                  std::to_string(fmt.channels) + " channels): " + path);
  }

  AudioClip clip;
  clip.sample_rate = static_cast<int>(fmt.sample_rate);
  if (fmt.format == kFormatPcm && fmt.bits == 16) {
    size_t n = data_len / 2;
    clip.samples.resize(n);
    for (size_t i = 0; i < n; ++i) {
      int16_t s = 0;
      std::memcpy(&s, data_ptr + 2 * i, 2);
      clip.samples[i] = static_cast<float>(s) / 32768.0f;
    }
  } else if (fmt.format == kFormatIeeeFloat && fmt.bits == 32) {
    size_t n = data_len / 4;
    clip.samples.resize(n);
    std::memcpy(clip.samples.data(), data_ptr, n * 4);
  } else {
    throw IoError("unsupported encoding (format " + std::to_string(fmt.format) +
                  ", " + std::to_string(fmt.bits) + " bits): " + path);
  }
  return clip;
}

int WriteWav(const std::string& path, const AudioClip& clip, WavFormat format) {
  if (clip.sample_rate <= 0) throw ConfigError("invalid sample rate on write: " + path);
  const bool pcm = format == WavFormat::kPcm16;
  const uint16_t bytes_per = pcm ? 2 : 4;
  const uint32_t data_len = static_cast<uint32_t>(clip.samples.size() * bytes_per);

  std::vector<uint8_t> out;
  out.reserve(44 + data_len);
  PutBytes(&out, "RIFF", 4);
  PutU32(&out, 36 + data_len);
  PutBytes(&out, "WAVE", 4);
  PutBytes(&out, "fmt ", 4);
  PutU32(&out, 16);
  PutU16(&out, pcm ? kFormatPcm : kFormatIeeeFloat);
  PutU16(&out, 1);
  PutU32(&out, static_cast<uint32_t>(clip.sample_rate));
  PutU32(&out, static_cast<uint32_t>(clip.sample_rate) * bytes_per);
  PutU16(&out, bytes_per);
  PutU16(&out, pcm ? 16 : 32);
  PutBytes(&out, "data", 4);
  PutU32(&out, data_len);

  int clipped = 0;
  for (float s : clip.samples) {
    float c = s;
    if (c > 1.0f) {
      c = 1.0f;
      ++clipped;
    } else if (c < -1.0f) {
      c = -1.0f;
      ++clipped;
    }
    if (pcm) {
      // Full-scale positive maps to 32767 so the read scale of 1/32768
      // round-trips every representable level.
      float scaled = c * 32768.0f;
      if (scaled > 32767.0f) scaled = 32767.0f;
      if (scaled < -32768.0f) scaled = -32768.0f;
      int16_t q = static_cast<int16_t>(std::lrintf(scaled));
      PutBytes(&out, &q, 2);
    } else {
      PutF32(&out, c);
    }
  }

  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) throw IoError("cannot open for writing: " + path);
  size_t written = std::fwrite(out.data(), 1, out.size(), f);
  std::fclose(f);
  if (written != out.size()) throw IoError("short write: " + path);
  if (clipped > 0) {
    DAPTAIN_WARN << "clipped " << clipped << " samples writing " << path;
  }
  return clipped;
}

}  // namespace daptain
