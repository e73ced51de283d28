// audio/synth.h

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

#ifndef DAPTAIN_AUDIO_SYNTH_H_
#define DAPTAIN_AUDIO_SYNTH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "audio/wav.h"
#include "util/rng.h"

namespace daptain {

// Two-domain synthetic corpus.  Utterances are harmonic tones with a
// syllabic amplitude modulation and randomized formant-like resonances; the
// domains differ in pitch range and, when domain_filter is set, in a fixed
// spectral coloration applied to the target side.  Three noise recordings
// (white, pink, babble) are generated once and split into disjoint
// training/evaluation halves before mixing.
struct CorpusSpec {
  int source_count = 120;
  int target_count = 900;
  double clip_seconds = 2.0;
  int sample_rate = 16000;
  double source_f0_lo = 105.0;
  double source_f0_hi = 190.0;
  double target_f0_lo = 125.0;
  double target_f0_hi = 250.0;
  bool domain_filter = true;
  std::vector<double> snrs_db = {-5.0, 0.0, 5.0};
  double noise_minutes = 4.0;
  double source_train_frac = 0.75;  // remainder is validation
  double target_train_frac = 0.6;   // remainder is test
};

struct SynthResult {
  std::string source_manifest;
  std::string target_manifest;
  int source_count = 0;
  int target_count = 0;
};

// Writes clean, noise, and mixture files plus the two manifests under
// out_dir.  Identical (spec, seed) pairs produce byte-identical trees.
SynthResult SynthCorpus(const CorpusSpec& spec, uint64_t seed,
                        const std::string& out_dir);

// One synthetic utterance; spectral parameters are drawn from rng in a fixed
// order so a forked generator reproduces the clip exactly.
AudioClip SynthUtterance(const CorpusSpec& spec, bool target_domain, Rng* rng);

// kind is one of "white", "pink", "babble".
AudioClip SynthNoise(const std::string& kind, int64_t num_samples,
                     int sample_rate, Rng* rng);

}  // namespace daptain

#endif  // DAPTAIN_AUDIO_SYNTH_H_
