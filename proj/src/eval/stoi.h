// eval/stoi.h

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

#ifndef DAPTAIN_EVAL_STOI_H_
#define DAPTAIN_EVAL_STOI_H_

#include "audio/wav.h"

namespace daptain {

// Short-time objective intelligibility in [0, 1].  Both clips are resampled
// to 10 kHz; frames more than 40 dB below the loudest clean frame are
// removed (clean mask applied to both signals); 15 one-third-octave band
// envelopes from 150 Hz are correlated over 30-frame segments with the
// processed envelope clipped at -15 dB SDR.  The reference recipe is
// mirrored by tests/oracle/stoi_reference.py.
//
// Throws ConfigError on length or rate mismatch and DegenerateInputError
// when the clean clip is silent or too short for one segment.
double Stoi(const AudioClip& clean, const AudioClip& processed);

}  // namespace daptain

#endif  // DAPTAIN_EVAL_STOI_H_
