// eval/fwsnrseg.h

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

#ifndef DAPTAIN_EVAL_FWSNRSEG_H_
#define DAPTAIN_EVAL_FWSNRSEG_H_

#include "audio/wav.h"

namespace daptain {

// Frequency-weighted segmental SNR in dB.  25 mel-spaced band magnitudes
// over 32 ms frames with 16 ms hop; per-band SNR is the processed band
// magnitude squared over the squared band-magnitude error, clamped to
// [-10, 35] dB; bands are averaged with clean-magnitude^0.2 weights per
// segment and segments averaged equally.  A perfect copy scores 35; a
// silent processed signal scores -10.
//
// Throws ConfigError on length or rate mismatch and DegenerateInputError
// when the clean clip is silent or shorter than one frame.
double FwSnrSeg(const AudioClip& clean, const AudioClip& processed);

}  // namespace daptain

#endif  // DAPTAIN_EVAL_FWSNRSEG_H_
