// audio/manifest.h

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

#ifndef DAPTAIN_AUDIO_MANIFEST_H_
#define DAPTAIN_AUDIO_MANIFEST_H_

#include <string>
#include <vector>

namespace daptain {

// One mixture: a clean utterance, the noise it was mixed with, and the
// mixture file itself.  Paths are stored relative to the manifest location.
struct MixtureRecord {
  std::string id;
  std::string clean_path;
  std::string noise_path;
  std::string mixture_path;
  std::string noise_name;
  double snr_db = 0.0;
  std::string split;   // train | validation | test
  std::string domain;  // source | target
};

struct Manifest {
  std::string dir;  // directory the manifest was read from / written to
  std::vector<MixtureRecord> records;

  std::string Resolve(const std::string& rel) const;
  std::vector<MixtureRecord> Split(const std::string& split) const;
};

// Line-delimited records, one JSON object per line.  Unknown keys and
// missing required keys are rejected.
Manifest ReadManifest(const std::string& path);
void WriteManifest(const std::string& path, const Manifest& manifest);

}  // namespace daptain

#endif  // DAPTAIN_AUDIO_MANIFEST_H_
