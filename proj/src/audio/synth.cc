// audio/synth.cc

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

#include "audio/synth.h"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "audio/manifest.h"
#include "audio/mix.h"
#include "util/error.h"
#include "util/log.h"

namespace daptain {

namespace fs = std::filesystem;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kCleanPeak = 0.35;
constexpr double kNoiseRms = 0.1;

// Fork tags; entries are spaced so domains and roles never collide.
constexpr uint64_t kTagNoiseBase = 1ull << 40;
constexpr uint64_t kTagTargetBase = 1ull << 32;

void NormalizePeak(std::vector<float>* x, double peak) {
  float max_abs = 0.0f;
  for (float v : *x) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs <= 0.0f) return;
  const float g = static_cast<float>(peak) / max_abs;
  for (float& v : *x) v *= g;
}

void NormalizeRms(std::vector<float>* x, double rms) {
  double r = Rms(*x);
  if (r <= 0.0) return;
  const float g = static_cast<float>(rms / r);
  for (float& v : *x) v *= g;
}

}  // namespace

AudioClip SynthUtterance(const CorpusSpec& spec, bool target_domain, Rng* rng) {
  const int rate = spec.sample_rate;
  const int64_t n = static_cast<int64_t>(std::llround(spec.clip_seconds * rate));
  if (n <= 0) throw ConfigError("synth: clip length must be positive");

  const double f0_lo = target_domain ? spec.target_f0_lo : spec.source_f0_lo;
  const double f0_hi = target_domain ? spec.target_f0_hi : spec.source_f0_hi;

  // Draw order is part of the format: f0, formants, modulation, phases.
  const double f0 = rng->Uniform(f0_lo, f0_hi);
  const double formants[3] = {rng->Uniform(300.0, 800.0),
                              rng->Uniform(900.0, 2000.0),
                              rng->Uniform(2200.0, 3200.0)};
  const double bws[3] = {rng->Uniform(80.0, 200.0), rng->Uniform(80.0, 200.0),
                         rng->Uniform(80.0, 200.0)};
  const double am_rate = rng->Uniform(2.0, 8.0);
  const double am_phase = rng->Uniform(0.0, kTwoPi);

  const int num_harmonics = std::max(1, static_cast<int>(3400.0 / f0));
  std::vector<double> amp(num_harmonics);
  std::vector<double> phase(num_harmonics);
  for (int k = 0; k < num_harmonics; ++k) {
    const double fk = f0 * (k + 1);
    double a = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double d = fk - formants[j];
      a += bws[j] * bws[j] / (d * d + bws[j] * bws[j]);
    }
    amp[k] = (a + 0.02) / std::sqrt(static_cast<double>(k + 1));
    phase[k] = rng->Uniform(0.0, kTwoPi);
  }

  AudioClip clip;
  clip.sample_rate = rate;
  clip.samples.resize(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / rate;
    const double env = 0.55 - 0.45 * std::cos(kTwoPi * am_rate * t + am_phase);
    double s = 0.0;
    for (int k = 0; k < num_harmonics; ++k) {
      s += amp[k] * std::sin(kTwoPi * f0 * (k + 1) * t + phase[k]);
    }
    clip.samples[static_cast<size_t>(i)] = static_cast<float>(env * s);
  }
  NormalizePeak(&clip.samples, kCleanPeak);

  if (target_domain && spec.domain_filter) {
    // Fixed one-zero coloration: a high-frequency tilt that shifts the
    // target feature distribution without changing the content.
    std::vector<float>& x = clip.samples;
    float prev = 0.0f;
    for (float& v : x) {
      const float cur = v;
      v = cur - 0.35f * prev;
      prev = cur;
    }
    NormalizePeak(&x, kCleanPeak);
  }
  return clip;
}

AudioClip SynthNoise(const std::string& kind, int64_t num_samples,
                     int sample_rate, Rng* rng) {
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.resize(static_cast<size_t>(num_samples));
  std::vector<float>& x = clip.samples;

  if (kind == "white") {
    for (int64_t i = 0; i < num_samples; ++i) {
      x[static_cast<size_t>(i)] = static_cast<float>(rng->Normal());
    }
  } else if (kind == "pink") {
    // Economy pink-noise filter (three pole approximation of 1/f).
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    for (int64_t i = 0; i < num_samples; ++i) {
      const double w = rng->Normal();
      b0 = 0.99765 * b0 + w * 0.0990460;
      b1 = 0.96300 * b1 + w * 0.2965164;
      b2 = 0.57000 * b2 + w * 1.0526913;
      x[static_cast<size_t>(i)] = static_cast<float>(b0 + b1 + b2 + w * 0.1848);
    }
  } else if (kind == "babble") {
    // Several low-passed noise streams with independent slow amplitude
    // modulation; their sum has speech-band energy and syllabic rhythm.
    constexpr int kStreams = 6;
    double lp[kStreams] = {0};
    double mod_rate[kStreams];
    double mod_phase[kStreams];
    for (int s = 0; s < kStreams; ++s) {
      mod_rate[s] = rng->Uniform(1.5, 4.5);
      mod_phase[s] = rng->Uniform(0.0, kTwoPi);
    }
    for (int64_t i = 0; i < num_samples; ++i) {
      const double t = static_cast<double>(i) / sample_rate;
      double acc = 0.0;
      for (int s = 0; s < kStreams; ++s) {
        lp[s] = 0.92 * lp[s] + 0.08 * rng->Normal();
        const double env =
            0.5 - 0.5 * std::cos(kTwoPi * mod_rate[s] * t + mod_phase[s]);
        acc += lp[s] * env;
      }
      x[static_cast<size_t>(i)] = static_cast<float>(acc);
    }
  } else {
    throw ConfigError("synth: unknown noise kind '" + kind + "'");
  }
  NormalizeRms(&x, kNoiseRms);
  return clip;
}

SynthResult SynthCorpus(const CorpusSpec& spec, uint64_t seed,
                        const std::string& out_dir) {
  if (spec.source_count < 1 || spec.target_count < 1) {
    throw ConfigError("synth: corpus counts must be positive");
  }
  if (spec.snrs_db.empty()) throw ConfigError("synth: need at least one SNR");

  const fs::path root(out_dir);
  std::error_code ec;
  fs::create_directories(root / "clean", ec);
  fs::create_directories(root / "noise", ec);
  fs::create_directories(root / "mix", ec);
  if (!fs::exists(root / "mix")) {
    throw IoError("cannot create corpus directory: " + out_dir);
  }

  Rng rng(seed);

  // Noise recordings, then their training/evaluation halves.
  const std::vector<std::string> kinds = {"white", "pink", "babble"};
  const int64_t noise_len = static_cast<int64_t>(
      std::llround(spec.noise_minutes * 60.0 * spec.sample_rate));
  std::vector<std::vector<float>> train_half(kinds.size());
  std::vector<std::vector<float>> eval_half(kinds.size());
  for (size_t k = 0; k < kinds.size(); ++k) {
    Rng nrng = rng.Fork(kTagNoiseBase + k);
    AudioClip noise = SynthNoise(kinds[k], noise_len, spec.sample_rate, &nrng);
    WriteWav((root / "noise" / (kinds[k] + ".wav")).string(), noise,
             WavFormat::kPcm16);
    // Mixing reads back the quantized file so manifests point at data that
    // reproduces the mixtures exactly.
    AudioClip quantized = ReadWav((root / "noise" / (kinds[k] + ".wav")).string());
    auto halves = SplitNoise(quantized.samples);
    train_half[k] = std::move(halves.first);
    eval_half[k] = std::move(halves.second);
  }

  SynthResult result;
  for (int domain = 0; domain < 2; ++domain) {
    const bool is_target = domain == 1;
    const int count = is_target ? spec.target_count : spec.source_count;
    const std::string tag = is_target ? "tgt" : "src";
    Manifest manifest;
    manifest.dir = out_dir;

    for (int i = 0; i < count; ++i) {
      Rng erng = rng.Fork((is_target ? kTagTargetBase : 0) +
                          static_cast<uint64_t>(i));
      AudioClip clean = SynthUtterance(spec, is_target, &erng);

      char name[64];
      std::snprintf(name, sizeof(name), "%s_%04d", tag.c_str(), i);
      const std::string clean_rel = std::string("clean/") + name + ".wav";
      const std::string mix_rel = std::string("mix/") + name + ".wav";
      WriteWav((root / clean_rel).string(), clean, WavFormat::kPcm16);

      MixtureRecord rec;
      rec.id = name;
      rec.clean_path = clean_rel;
      rec.noise_name = kinds[i % kinds.size()];
      rec.noise_path = "noise/" + rec.noise_name + ".wav";
      rec.mixture_path = mix_rel;
      rec.snr_db = spec.snrs_db[(i / kinds.size()) % spec.snrs_db.size()];
      rec.domain = is_target ? "target" : "source";
      if (is_target) {
        rec.split = (i % 5 >= 3) ? "test" : "train";
      } else {
        rec.split = (i % 4 == 3) ? "validation" : "train";
      }

      // Clean files are re-read so mixtures are built from the quantized
      // samples the manifest refers to.
      AudioClip clean_q = ReadWav((root / clean_rel).string());
      const std::vector<float>& half = rec.split == "test"
                                           ? eval_half[i % kinds.size()]
                                           : train_half[i % kinds.size()];
      if (half.size() < clean_q.samples.size()) {
        throw DegenerateInputError("synth: noise half shorter than clip");
      }
      const uint64_t max_off = half.size() - clean_q.samples.size();
      const uint64_t off = max_off > 0 ? erng.UniformInt(max_off + 1) : 0;
      std::vector<float> segment(half.begin() + static_cast<int64_t>(off),
                                 half.begin() + static_cast<int64_t>(off) +
                                     static_cast<int64_t>(clean_q.samples.size()));
      MixResult mixed = MixAtSnr(clean_q.samples, segment, rec.snr_db);

      AudioClip mix_clip;
      mix_clip.sample_rate = spec.sample_rate;
      mix_clip.samples = std::move(mixed.mixture);
      // Float output keeps the achieved SNR exact on reload.
      WriteWav((root / mix_rel).string(), mix_clip, WavFormat::kFloat32);

      manifest.records.push_back(std::move(rec));
    }

    const std::string manifest_path =
        (root / (is_target ? "target_manifest.jsonl" : "source_manifest.jsonl"))
            .string();
    WriteManifest(manifest_path, manifest);
    if (is_target) {
      result.target_manifest = manifest_path;
      result.target_count = count;
    } else {
      result.source_manifest = manifest_path;
      result.source_count = count;
    }
  }

  DAPTAIN_INFO << "synthesized corpus: " << result.source_count << " source, "
               << result.target_count << " target mixtures under " << out_dir;
  return result;
}

}  // namespace daptain
