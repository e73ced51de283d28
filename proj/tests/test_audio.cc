// tests/test_audio.cc

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

#include <cmath>
#include <numeric>

#include <doctest.h>

#include "audio/blocks.h"
#include "audio/manifest.h"
#include "audio/mix.h"
#include "audio/resample.h"
#include "audio/synth.h"
#include "audio/wav.h"
#include "tests/test_util.h"
#include "util/error.h"
#include "util/rng.h"

namespace daptain {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<float> Tone(double freq, int rate, int64_t n, double amp) {
  std::vector<float> x(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    x[static_cast<size_t>(i)] =
        static_cast<float>(amp * std::sin(kTwoPi * freq * i / rate));
  }
  return x;
}

double RmsOfMiddle(const std::vector<float>& x) {
  const size_t lo = x.size() / 4;
  const size_t hi = 3 * x.size() / 4;
  double acc = 0.0;
  for (size_t i = lo; i < hi; ++i) acc += static_cast<double>(x[i]) * x[i];
  return std::sqrt(acc / static_cast<double>(hi - lo));
}

TEST_CASE("wav 16-bit scaling and round trip") {
  TempDir tmp("wav");
  AudioClip clip;
  clip.sample_rate = 16000;
  clip.samples = {0.0f, 32767.0f / 32768.0f, -1.0f, 0.5f, -0.25f};
  const int clipped = WriteWav(tmp.Sub("a.wav"), clip, WavFormat::kPcm16);
  CHECK(clipped == 0);

  AudioClip back = ReadWav(tmp.Sub("a.wav"));
  CHECK(back.sample_rate == 16000);
  REQUIRE(back.samples.size() == clip.samples.size());
  CHECK(back.samples[0] == 0.0f);
  CHECK(back.samples[1] == doctest::Approx(32767.0 / 32768.0).epsilon(1e-9));
  CHECK(back.samples[2] == -1.0f);
  for (size_t i = 0; i < clip.samples.size(); ++i) {
    CHECK(std::abs(back.samples[i] - clip.samples[i]) <= 0.5f / 32768.0f);
  }

  // A second write of the read-back data reproduces the file exactly:
  // quantization is idempotent.
  WriteWav(tmp.Sub("b.wav"), back, WavFormat::kPcm16);
  CHECK(ReadFileBytes(tmp.Sub("a.wav")) == ReadFileBytes(tmp.Sub("b.wav")));
}

TEST_CASE("wav float32 keeps samples bit-exact") {
  TempDir tmp("wavf");
  AudioClip clip;
  clip.sample_rate = 8000;
  Rng rng(7);
  for (int i = 0; i < 777; ++i) {
    clip.samples.push_back(static_cast<float>(rng.Uniform(-0.9, 0.9)));
  }
  WriteWav(tmp.Sub("f.wav"), clip, WavFormat::kFloat32);
  AudioClip back = ReadWav(tmp.Sub("f.wav"));
  REQUIRE(back.samples.size() == clip.samples.size());
  for (size_t i = 0; i < clip.samples.size(); ++i) {
    CHECK(back.samples[i] == clip.samples[i]);
  }
}

TEST_CASE("wav write clips out-of-range samples and counts them") {
  TempDir tmp("wavclip");
  AudioClip clip;
  clip.sample_rate = 16000;
  clip.samples = {1.5f, -2.0f, 0.0f};
  CHECK(WriteWav(tmp.Sub("c.wav"), clip, WavFormat::kPcm16) == 2);
  AudioClip back = ReadWav(tmp.Sub("c.wav"));
  CHECK(back.samples[0] == doctest::Approx(32767.0 / 32768.0));
  CHECK(back.samples[1] == -1.0f);
}

TEST_CASE("wav duration and error paths") {
  TempDir tmp("waverr");
  AudioClip clip;
  clip.sample_rate = 16000;
  clip.samples.assign(32000, 0.25f);
  CHECK(clip.DurationSeconds() == doctest::Approx(2.0));
  CHECK_THROWS_AS(ReadWav(tmp.Sub("missing.wav")), IoError);

  std::ofstream bad(tmp.Sub("bad.wav"), std::ios::binary);
  bad << "not a riff file at all";
  bad.close();
  CHECK_THROWS_AS(ReadWav(tmp.Sub("bad.wav")), IoError);
}

TEST_CASE("resample identity and length contract") {
  std::vector<float> x = Tone(440.0, 16000, 1600, 0.5);
  CHECK(Resample(x, 16000, 16000) == x);
  CHECK(Resample(x, 16000, 10000).size() == 1000);
  CHECK(Resample(x, 16000, 48000).size() == 4800);
}

TEST_CASE("resample preserves tone level within 0.1 dB") {
  const double amp = 0.5;
  std::vector<float> x = Tone(1000.0, 16000, 32000, amp);
  for (int dst : {10000, 8000, 48000}) {
    std::vector<float> y = Resample(x, 16000, dst);
    const double rms = RmsOfMiddle(y);
    const double expected = amp / std::sqrt(2.0);
    const double db = 20.0 * std::log10(rms / expected);
    INFO("dst rate ", dst, " level error db ", db);
    CHECK(std::abs(db) < 0.1);
  }
}

TEST_CASE("mix gain hits the requested snr exactly") {
  Rng rng(11);
  std::vector<float> clean = Tone(220.0, 16000, 8000, 0.3);
  std::vector<float> noise(9000);
  for (float& v : noise) v = static_cast<float>(0.2 * rng.Normal());

  SUBCASE("0 dB equalizes rms") {
    MixResult r = MixAtSnr(clean, noise, 0.0);
    std::vector<float> scaled(clean.size());
    for (size_t i = 0; i < clean.size(); ++i) {
      scaled[i] = static_cast<float>(r.noise_gain * noise[i]);
    }
    CHECK(std::abs(Rms(scaled) - Rms(clean)) < 1e-9);
    CHECK(std::abs(r.achieved_snr_db) < 1e-6);
  }

  SUBCASE("-5 dB boosts the noise by 10^(1/4)") {
    MixResult r = MixAtSnr(clean, noise, -5.0);
    MixResult r0 = MixAtSnr(clean, noise, 0.0);
    CHECK(r.noise_gain / r0.noise_gain ==
          doctest::Approx(std::pow(10.0, 0.25)).epsilon(1e-9));
    CHECK(r.achieved_snr_db == doctest::Approx(-5.0).epsilon(1e-9));
  }

  SUBCASE("achieved snr recomputed from the parts") {
    MixResult r = MixAtSnr(clean, noise, 5.0);
    double cs = 0.0, ns = 0.0;
    for (size_t i = 0; i < clean.size(); ++i) {
      const double n = r.mixture[i] - clean[i];
      cs += static_cast<double>(clean[i]) * clean[i];
      ns += n * n;
    }
    CHECK(10.0 * std::log10(cs / ns) == doctest::Approx(5.0).epsilon(1e-5));
  }

  SUBCASE("degenerate inputs are rejected") {
    std::vector<float> zeros(8000, 0.0f);
    CHECK_THROWS_AS(MixAtSnr(zeros, noise, 0.0), DegenerateInputError);
    CHECK_THROWS_AS(MixAtSnr(clean, zeros, 0.0), DegenerateInputError);
    std::vector<float> short_noise(100, 0.1f);
    CHECK_THROWS_AS(MixAtSnr(clean, short_noise, 0.0), DegenerateInputError);
  }
}

TEST_CASE("split noise halves") {
  std::vector<float> five = {1, 2, 3, 4, 5};
  auto [a, b] = SplitNoise(five);
  CHECK(a == std::vector<float>({1, 2, 3}));
  CHECK(b == std::vector<float>({4, 5}));

  std::vector<float> four_min(static_cast<size_t>(4 * 60 * 16000), 0.1f);
  auto halves = SplitNoise(four_min);
  CHECK(halves.first.size() == 1920000);
  CHECK(halves.second.size() == 1920000);

  std::vector<float> joined = a;
  joined.insert(joined.end(), b.begin(), b.end());
  CHECK(joined == five);
}

TEST_CASE("frame blocks tile the signal exactly") {
  SUBCASE("hop-length input gives one block with 200-sample wings") {
    std::vector<float> x(600);
    std::iota(x.begin(), x.end(), 1.0f);
    BlockSet bs = FrameBlocks(x, 1000, 600);
    REQUIRE(bs.blocks.size() == 1);
    std::vector<float> center = BlockCenter(bs.blocks[0], 1000, 600);
    CHECK(center == x);
    // Left wing mirrors the head of the signal.
    CHECK(bs.blocks[0][199] == x[1]);
    CHECK(bs.blocks[0][198] == x[2]);
  }

  SUBCASE("1800 samples give three blocks") {
    std::vector<float> x(1800, 0.5f);
    CHECK(FrameBlocks(x, 1000, 600).blocks.size() == 3);
  }

  SUBCASE("assemble is the identity for every length up to 5000") {
    Rng rng(3);
    for (int len = 1; len <= 5000; ++len) {
      std::vector<float> x(static_cast<size_t>(len));
      for (float& v : x) v = static_cast<float>(rng.Uniform(-1.0, 1.0));
      BlockSet bs = FrameBlocks(x, 1000, 600);
      CHECK(bs.blocks.size() == static_cast<size_t>((len + 599) / 600));
      if (AssembleCenters(bs) != x) {
        REQUIRE_MESSAGE(false, "assembly mismatch at length ", len);
      }
    }
  }

  SUBCASE("invalid geometry is rejected") {
    std::vector<float> x(100, 0.0f);
    CHECK_THROWS_AS(FrameBlocks(x, 999, 600), ConfigError);
    CHECK_THROWS_AS(FrameBlocks(x, 600, 1000), ConfigError);
    CHECK_THROWS_AS(FrameBlocks({}, 1000, 600), DegenerateInputError);
  }
}

TEST_CASE("manifest round trip and strict keys") {
  TempDir tmp("manifest");
  Manifest m;
  m.dir = tmp.path().string();
  MixtureRecord r;
  r.id = "src_0000";
  r.clean_path = "clean/src_0000.wav";
  r.noise_path = "noise/white.wav";
  r.mixture_path = "mix/src_0000.wav";
  r.noise_name = "white";
  r.snr_db = -5.0;
  r.split = "train";
  r.domain = "source";
  m.records.push_back(r);

  const std::string path = tmp.Sub("m.jsonl");
  WriteManifest(path, m);
  Manifest back = ReadManifest(path);
  REQUIRE(back.records.size() == 1);
  CHECK(back.records[0].id == "src_0000");
  CHECK(back.records[0].snr_db == -5.0);
  CHECK(back.Resolve(back.records[0].clean_path) ==
        (tmp.path() / "clean/src_0000.wav").string());

  std::ofstream f(tmp.Sub("bad.jsonl"));
  f << R"({"id":"x","clean_path":"a","noise_path":"b","mixture_path":"c",)"
    << R"("noise_name":"white","snr_db":0,"split":"train","domain":"source",)"
    << R"("surprise":1})"
    << "\n";
  f.close();
  CHECK_THROWS_AS(ReadManifest(tmp.Sub("bad.jsonl")), IoError);

  std::ofstream g(tmp.Sub("missing.jsonl"));
  g << R"({"id":"x"})" << "\n";
  g.close();
  CHECK_THROWS_AS(ReadManifest(tmp.Sub("missing.jsonl")), IoError);
}

TEST_CASE("synthetic corpus is deterministic and well formed") {
  TempDir tmp("synth");
  CorpusSpec spec;
  spec.source_count = 6;
  spec.target_count = 10;
  spec.clip_seconds = 0.5;
  spec.noise_minutes = 0.05;

  SynthResult a = SynthCorpus(spec, 42, tmp.Sub("a"));
  SynthResult b = SynthCorpus(spec, 42, tmp.Sub("b"));
  CHECK(a.source_count == 6);
  CHECK(a.target_count == 10);
  CHECK(CountLines(a.source_manifest) == 6);
  CHECK(CountLines(a.target_manifest) == 10);

  for (const char* rel :
       {"source_manifest.jsonl", "target_manifest.jsonl", "clean/src_0000.wav",
        "clean/tgt_0003.wav", "mix/src_0002.wav", "noise/pink.wav"}) {
    INFO("comparing ", rel);
    CHECK(ReadFileBytes(tmp.Sub("a") + "/" + rel) ==
          ReadFileBytes(tmp.Sub("b") + "/" + rel));
  }

  SynthResult c = SynthCorpus(spec, 43, tmp.Sub("c"));
  CHECK(ReadFileBytes(tmp.Sub("a") + "/clean/src_0000.wav") !=
        ReadFileBytes(tmp.Sub("c") + "/clean/src_0000.wav"));

  Manifest src = ReadManifest(a.source_manifest);
  int train = 0, val = 0;
  for (const MixtureRecord& rec : src.records) {
    if (rec.split == "train") ++train;
    if (rec.split == "validation") ++val;
    CHECK(rec.domain == "source");
    AudioClip mix = ReadWav(src.Resolve(rec.mixture_path));
    AudioClip clean = ReadWav(src.Resolve(rec.clean_path));
    REQUIRE(mix.samples.size() == clean.samples.size());
    // Reload preserves the requested SNR because mixtures are float and the
    // manifest points at the quantized clean file.
    double cs = 0.0, ns = 0.0;
    for (size_t i = 0; i < mix.samples.size(); ++i) {
      const double n = mix.samples[i] - clean.samples[i];
      cs += static_cast<double>(clean.samples[i]) * clean.samples[i];
      ns += n * n;
    }
    CHECK(10.0 * std::log10(cs / ns) ==
          doctest::Approx(rec.snr_db).epsilon(1e-4));
  }
  CHECK(train == 5);
  CHECK(val == 1);

  Manifest tgt = ReadManifest(a.target_manifest);
  int test = 0;
  for (const MixtureRecord& rec : tgt.records) {
    if (rec.split == "test") ++test;
  }
  CHECK(test == 4);
}

TEST_CASE("synth utterances differ across domains via pitch and coloration") {
  CorpusSpec spec;
  spec.clip_seconds = 0.25;
  Rng rng(5);
  Rng fork_a = rng.Fork(1);
  Rng fork_b = rng.Fork(1);
  AudioClip u1 = SynthUtterance(spec, false, &fork_a);
  AudioClip u2 = SynthUtterance(spec, false, &fork_b);
  CHECK(u1.samples == u2.samples);

  float peak = 0.0f;
  for (float v : u1.samples) peak = std::max(peak, std::abs(v));
  CHECK(peak == doctest::Approx(0.35f).epsilon(1e-3));
}

}  // namespace
}  // namespace daptain
