// audio/wav.h

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

#ifndef DAPTAIN_AUDIO_WAV_H_
#define DAPTAIN_AUDIO_WAV_H_

#include <cstdint>
#include <string>
#include <vector>

namespace daptain {

// Mono audio in [-1, 1] at a known sample rate.
struct AudioClip {
  int sample_rate = 0;
  std::vector<float> samples;

  double DurationSeconds() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

enum class WavFormat { kPcm16, kFloat32 };

// Reads a RIFF/WAVE file.  Supported encodings: PCM 16-bit and IEEE float
// 32-bit, mono.  16-bit samples are scaled by 1/32768.  Unknown chunks are
// skipped.  Throws IoError on malformed input or unsupported encodings.
AudioClip ReadWav(const std::string& path);

// Writes a mono RIFF/WAVE file.  Samples outside [-1, 1] are hard-clipped;
// the return value is the number of clipped samples (also logged as a
// warning when nonzero).
int WriteWav(const std::string& path, const AudioClip& clip,
             WavFormat format = WavFormat::kPcm16);

}  // namespace daptain

#endif  // DAPTAIN_AUDIO_WAV_H_
