// tests/test_dsp.cc

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
#include <complex>

#include <doctest.h>

#include "audio/blocks.h"
#include "audio/synth.h"
#include "dsp/ams.h"
#include "dsp/dscc.h"
#include "dsp/features.h"
#include "dsp/filterbank.h"
#include "dsp/rasta.h"
#include "dsp/stft.h"
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

std::vector<float> WhiteNoise(int64_t n, double amp, uint64_t seed) {
  Rng rng(seed);
  std::vector<float> x(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    x[static_cast<size_t>(i)] = static_cast<float>(amp * rng.Normal());
  }
  return x;
}

// O(n^2) reference DFT.
void NaiveDft(const std::vector<double>& in_re, const std::vector<double>& in_im,
              std::vector<double>* out_re, std::vector<double>* out_im) {
  const size_t n = in_re.size();
  out_re->assign(n, 0.0);
  out_im->assign(n, 0.0);
  for (size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t t = 0; t < n; ++t) {
      const double ang = -kTwoPi * static_cast<double>(k) * static_cast<double>(t) /
                         static_cast<double>(n);
      acc += std::complex<double>(in_re[t], in_im[t]) *
             std::complex<double>(std::cos(ang), std::sin(ang));
    }
    (*out_re)[k] = acc.real();
    (*out_im)[k] = acc.imag();
  }
}

TEST_CASE("fft matches a direct transform") {
  Rng rng(11);
  std::vector<double> re(128), im(128);
  for (size_t i = 0; i < re.size(); ++i) {
    re[i] = rng.Normal();
    im[i] = rng.Normal();
  }
  std::vector<double> want_re, want_im;
  NaiveDft(re, im, &want_re, &want_im);
  Fft(&re, &im);
  for (size_t k = 0; k < re.size(); ++k) {
    CHECK(re[k] == doctest::Approx(want_re[k]).epsilon(1e-9));
    CHECK(im[k] == doctest::Approx(want_im[k]).epsilon(1e-9));
  }
}

TEST_CASE("stft of silence is zero") {
  std::vector<float> x(2048, 0.0f);
  const Stft s = ComputeStft(x.data(), static_cast<int64_t>(x.size()), 512, 256, 512);
  CHECK(s.num_bins == 257);
  for (double m : s.mag) CHECK(m == 0.0);
}

TEST_CASE("stft puts a 1 kHz tone at bin 32") {
  const std::vector<float> x = Tone(1000.0, 16000, 4096, 0.5);
  const Stft s = ComputeStft(x.data(), static_cast<int64_t>(x.size()), 512, 256, 512);
  for (int f = 0; f < s.num_frames; ++f) {
    int best = 0;
    for (int b = 1; b < s.num_bins; ++b) {
      if (s.at(f, b) > s.at(f, best)) best = b;
    }
    CHECK(best == 32);
  }
}

TEST_CASE("stft frames satisfy the windowed energy identity") {
  const std::vector<float> x = WhiteNoise(1024, 0.4, 7);
  const int win = 512, hop = 256;
  const Stft s = ComputeStft(x.data(), static_cast<int64_t>(x.size()), win, hop, win);
  REQUIRE(s.num_frames == 3);
  for (int f = 0; f < s.num_frames; ++f) {
    double freq_energy = s.at(f, 0) * s.at(f, 0) +
                         s.at(f, s.num_bins - 1) * s.at(f, s.num_bins - 1);
    for (int b = 1; b < s.num_bins - 1; ++b) {
      freq_energy += 2.0 * s.at(f, b) * s.at(f, b);
    }
    freq_energy /= win;
    double time_energy = 0.0;
    for (int t = 0; t < win; ++t) {
      const double w = 0.5 - 0.5 * std::cos(kTwoPi * t / win);
      const size_t idx = static_cast<size_t>(f * hop + t);
      const double v = idx < x.size() ? x[idx] * w : 0.0;
      time_energy += v * v;
    }
    CHECK(freq_energy == doctest::Approx(time_energy).epsilon(1e-6));
  }
}

TEST_CASE("stft rejects input shorter than the window") {
  std::vector<float> x(100, 0.1f);
  CHECK_THROWS_AS(ComputeStft(x.data(), 100, 512, 256, 512), DegenerateInputError);
}

TEST_CASE("ams silence hits the log floor in every band") {
  std::vector<float> x(4000, 0.0f);
  const std::vector<std::vector<double>> f = AmsFeatures(x.data(), x.size());
  REQUIRE(!f.empty());
  for (const std::vector<double>& frame : f) {
    REQUIRE(frame.size() == static_cast<size_t>(kAmsBands));
    for (double v : frame) CHECK(v == doctest::Approx(-10.0));
  }
}

TEST_CASE("ams low band dominates for 4 Hz modulation") {
  // 1 kHz carrier, 80% depth at 4 Hz.
  const int rate = 16000;
  const int64_t n = 16000;
  std::vector<float> x(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    const double env = 1.0 + 0.8 * std::cos(kTwoPi * 4.0 * i / rate);
    x[static_cast<size_t>(i)] =
        static_cast<float>(0.3 * env * std::sin(kTwoPi * 1000.0 * i / rate));
  }
  const std::vector<std::vector<double>> f = AmsFeatures(x.data(), x.size());
  std::vector<double> mean(kAmsBands, 0.0);
  for (const std::vector<double>& frame : f) {
    for (int b = 0; b < kAmsBands; ++b) mean[static_cast<size_t>(b)] += frame[static_cast<size_t>(b)];
  }
  for (double& v : mean) v /= static_cast<double>(f.size());

  const std::vector<double> centers = AmsBandCenters();
  for (int b = 1; b < kAmsBands; ++b) {
    if (centers[static_cast<size_t>(b)] > 100.0) {
      CHECK(mean[0] > mean[static_cast<size_t>(b)]);
    }
  }

  // Independent check on the envelope spectrum: rectify, block-average by 4,
  // Hann window, direct DFT.  Modulation energy must sit below 20 Hz, not in
  // the 100..500 Hz bins.
  std::vector<double> env_re(128, 0.0), env_im(128, 0.0);
  for (int i = 0; i < 128; ++i) {
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) acc += std::abs(static_cast<double>(x[static_cast<size_t>(4 * i + k)]));
    env_re[static_cast<size_t>(i)] =
        acc / 4.0 * (0.5 - 0.5 * std::cos(kTwoPi * i / 128.0));
  }
  std::vector<double> sp_re, sp_im;
  NaiveDft(env_re, env_im, &sp_re, &sp_im);
  auto bin_energy = [&](int j) {
    return sp_re[static_cast<size_t>(j)] * sp_re[static_cast<size_t>(j)] +
           sp_im[static_cast<size_t>(j)] * sp_im[static_cast<size_t>(j)];
  };
  const double low = bin_energy(0) + bin_energy(1);  // below 62.5 Hz
  for (int j = 4; j <= 16; ++j) {                    // 125..500 Hz
    CHECK(low > 10.0 * bin_energy(j));
  }
}

TEST_CASE("rasta filter zeroes constant trajectories immediately") {
  std::vector<std::vector<double>> traj(10, std::vector<double>(5, 3.7));
  const std::vector<std::vector<double>> y = RastaFilter(traj);
  for (const std::vector<double>& frame : y) {
    for (double v : frame) CHECK(std::abs(v) < 1e-12);
  }
}

TEST_CASE("rasta filter rejects stationary tone spectra") {
  // Tone period divides the hop, so every full frame sees identical content.
  const std::vector<float> x = Tone(1000.0, 16000, 512 + 13 * 256, 0.4);
  const std::vector<std::vector<double>> logs = BarkLogSpectra(x.data(), x.size());
  const std::vector<std::vector<double>> y = RastaFilter(logs);
  REQUIRE(y.size() == 14);
  for (size_t t = 4; t < y.size(); ++t) {
    for (double v : y[t]) CHECK(std::abs(v) < 1e-6);
  }
}

TEST_CASE("rasta plp cepstra ignore a gain change") {
  const std::vector<float> x = WhiteNoise(512 + 13 * 256, 0.3, 21);
  std::vector<float> x2(x);
  for (float& v : x2) v *= 2.0f;
  const std::vector<std::vector<double>> a = RastaPlp(x.data(), x.size());
  const std::vector<std::vector<double>> b = RastaPlp(x2.data(), x2.size());
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() >= 6);
  for (const std::vector<double>& frame : a) REQUIRE(frame.size() == static_cast<size_t>(kRastaCepstra));
  const double shift = a[4][0] - b[4][0];
  for (size_t t = 4; t < a.size(); ++t) {
    CHECK(std::abs(a[t][0] - b[t][0] - shift) < 1e-6);
    for (int k = 1; k < kRastaCepstra; ++k) {
      CHECK(std::abs(a[t][static_cast<size_t>(k)] - b[t][static_cast<size_t>(k)]) < 1e-6);
    }
  }
}

TEST_CASE("dscc of a constant spectrum is zero") {
  std::vector<std::vector<double>> mel(7, std::vector<double>(kDsccMelBands, 2.5));
  for (const std::vector<double>& c : DsccFromMel(mel)) {
    REQUIRE(c.size() == static_cast<size_t>(kDsccCoeffs));
    for (double v : c) CHECK(std::abs(v) < 1e-9);
  }
  // A DC signal gives bit-identical frames, hence exactly constant spectra.
  std::vector<float> x(512 + 9 * 256, 0.5f);
  for (const std::vector<double>& c : Dscc(x.data(), x.size())) {
    for (double v : c) CHECK(std::abs(v) < 1e-9);
  }
}

TEST_CASE("dscc deltas are antisymmetric under frame reversal") {
  Rng rng(33);
  std::vector<std::vector<double>> m(9, std::vector<double>(kDsccMelBands));
  for (std::vector<double>& row : m) {
    for (double& v : row) v = std::abs(rng.Normal());
  }
  std::vector<std::vector<double>> rev(m.rbegin(), m.rend());
  const std::vector<std::vector<double>> d = DeltaFrames(m);
  const std::vector<std::vector<double>> dr = DeltaFrames(rev);
  for (size_t t = 0; t < m.size(); ++t) {
    for (size_t b = 0; b < m[0].size(); ++b) {
      CHECK(dr[t][b] == -d[m.size() - 1 - t][b]);
    }
  }
}

TEST_CASE("dscc needs five frames") {
  const std::vector<float> block = Tone(440.0, 16000, 1000, 0.3);
  CHECK_THROWS_AS(Dscc(block.data(), block.size()), DegenerateInputError);
  // The frame-level entry point still works for short blocks.
  const std::vector<std::vector<double>> mel = MelSpectra(block.data(), block.size());
  REQUIRE(mel.size() == 3);
  CHECK(DsccFromMel(mel).size() == 3);
}

TEST_CASE("inverse normal cdf hits known quantiles") {
  CHECK(InverseNormalCdf(0.5) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(InverseNormalCdf(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-6));
  CHECK(InverseNormalCdf(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-6));
  CHECK(InverseNormalCdf(0.8413447460685429) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(InverseNormalCdf(0.0013498980316300933) == doctest::Approx(-3.0).epsilon(1e-6));
  CHECK_THROWS_AS(InverseNormalCdf(0.0), DegenerateInputError);
}

TEST_CASE("block feature vectors are 41-dimensional and deterministic") {
  CorpusSpec spec;
  Rng rng(Rng(99).Fork(1));
  const AudioClip clip = SynthUtterance(spec, false, &rng);
  const BlockSet blocks = FrameBlocks(clip.samples, 1000, 600);
  const std::vector<double> a =
      BlockFeatureVector(blocks.blocks[0].data(), blocks.blocks[0].size());
  const std::vector<double> b =
      BlockFeatureVector(blocks.blocks[0].data(), blocks.blocks[0].size());
  REQUIRE(a.size() == static_cast<size_t>(kFeatureDim));
  CHECK(a == b);
  for (double v : a) CHECK(std::isfinite(v));
}

TEST_CASE("block features separate domains and normalize cleanly") {
  CorpusSpec spec;
  std::vector<std::vector<double>> rows[2];
  for (int domain = 0; domain < 2; ++domain) {
    for (int u = 0; u < 4; ++u) {
      Rng rng(Rng(1234).Fork(static_cast<uint64_t>(domain * 16 + u)));
      const AudioClip clip = SynthUtterance(spec, domain == 1, &rng);
      const BlockSet blocks = FrameBlocks(clip.samples, 1000, 600);
      for (const std::vector<float>& blk : blocks.blocks) {
        rows[domain].push_back(BlockFeatureVector(blk.data(), blk.size()));
      }
    }
    REQUIRE(rows[domain].size() >= 200);
  }

  // Welch two-sample t statistic per dimension.
  int strong = 0;
  for (int d = 0; d < kFeatureDim; ++d) {
    double m[2], s2[2];
    for (int g = 0; g < 2; ++g) {
      const double n = static_cast<double>(rows[g].size());
      double mean = 0.0;
      for (const std::vector<double>& r : rows[g]) mean += r[static_cast<size_t>(d)];
      mean /= n;
      double var = 0.0;
      for (const std::vector<double>& r : rows[g]) {
        const double c = r[static_cast<size_t>(d)] - mean;
        var += c * c;
      }
      m[g] = mean;
      s2[g] = var / (n - 1.0);
    }
    const double se = std::sqrt(s2[0] / static_cast<double>(rows[0].size()) +
                                s2[1] / static_cast<double>(rows[1].size()));
    if (se > 0.0 && std::abs(m[0] - m[1]) / se > 3.0) ++strong;
  }
  CHECK(strong >= 5);

  // Normalization stats round trip on the pooled rows.
  std::vector<std::vector<double>> all(rows[0]);
  all.insert(all.end(), rows[1].begin(), rows[1].end());
  const FeatureStats stats = ComputeFeatureStats(all);
  for (double sd : stats.sd) CHECK(sd != 1.0);  // no degenerate dimensions
  for (std::vector<double>& r : all) NormalizeFeature(stats, &r);
  const FeatureStats after = ComputeFeatureStats(all);
  for (int d = 0; d < kFeatureDim; ++d) {
    CHECK(std::abs(after.mean[static_cast<size_t>(d)]) <= 1e-6);
    CHECK(after.sd[static_cast<size_t>(d)] == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("filterbanks cover their range") {
  int bark_bands = 0;
  const Filterbank bark = BarkFilterbank(257, 512, 16000, &bark_bands);
  CHECK(bark_bands == 21);
  const Filterbank mel = MelFilterbank(40, 257, 512, 16000, 0.0, 8000.0);
  REQUIRE(mel.size() == 40);
  // Every mel band has support, and every bin above the first band's center
  // contributes somewhere.
  for (const std::vector<double>& band : mel) {
    double total = 0.0;
    for (double w : band) total += w;
    CHECK(total > 0.0);
  }
  std::vector<double> bin_cover(257, 0.0);
  for (const std::vector<double>& band : bark) {
    for (size_t j = 0; j < band.size(); ++j) bin_cover[j] += band[j];
  }
  for (size_t j = 0; j < bin_cover.size(); ++j) {
    CHECK(bin_cover[j] > 0.0);
  }
}

}  // namespace
}  // namespace daptain
