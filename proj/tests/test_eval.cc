// tests/test_eval.cc

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
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "audio/mix.h"
#include "audio/synth.h"
#include "audio/wav.h"
#include "eval/fwsnrseg.h"
#include "eval/report.h"
#include "eval/stoi.h"
#include "eval/ttest.h"
#include "tests/test_util.h"
#include "util/error.h"
#include "util/rng.h"

namespace daptain {
namespace {

AudioClip MakeClip(std::vector<float> samples, int rate = 16000) {
  AudioClip c;
  c.sample_rate = rate;
  c.samples = std::move(samples);
  return c;
}

AudioClip WithNoise(const AudioClip& clean, const AudioClip& noise,
                    double snr_db) {
  return MakeClip(MixAtSnr(clean.samples, noise.samples, snr_db).mixture,
                  clean.sample_rate);
}

// The ten oracle pairs: one clean utterance against itself, noisy mixes,
// a lowpassed copy, a rescaled mix, pure noise, and a different utterance.
// Expected values frozen from tests/oracle/stoi_reference.py; regenerate
// the vectors with DAPTAIN_DUMP_STOI_VECTORS=<dir>.
struct StoiVectors {
  std::vector<AudioClip> cleans;
  std::vector<AudioClip> procs;
};

StoiVectors BuildStoiVectors() {
  CorpusSpec spec;
  Rng rng(4242);
  const AudioClip clean = SynthUtterance(spec, false, &rng);
  const AudioClip clean2 = SynthUtterance(spec, false, &rng);
  const int64_t n = static_cast<int64_t>(clean.samples.size());
  const AudioClip white = SynthNoise("white", n, 16000, &rng);
  const AudioClip pink = SynthNoise("pink", n, 16000, &rng);
  const AudioClip babble = SynthNoise("babble", n, 16000, &rng);

  AudioClip lowpass = clean;
  for (size_t i = 0; i < lowpass.samples.size(); ++i) {
    double acc = 0.0;
    for (size_t k = 0; k < 8; ++k) {
      acc += i >= k ? clean.samples[i - k] : 0.0f;
    }
    lowpass.samples[i] = static_cast<float>(acc / 8.0);
  }
  AudioClip faint = WithNoise(clean, white, 10.0);
  for (float& v : faint.samples) v *= 0.25f;
  AudioClip noise_only = white;
  const float gain =
      static_cast<float>(Rms(clean.samples) / Rms(white.samples));
  for (float& v : noise_only.samples) v *= gain;

  StoiVectors v;
  for (int i = 0; i < 10; ++i) v.cleans.push_back(clean);
  v.cleans[9] = clean;
  v.procs = {clean,
             WithNoise(clean, white, 15.0),
             WithNoise(clean, white, 5.0),
             WithNoise(clean, white, -5.0),
             WithNoise(clean, babble, 0.0),
             WithNoise(clean, pink, 0.0),
             lowpass,
             faint,
             noise_only,
             clean2};
  return v;
}

TEST_CASE("stoi matches the frozen reference values") {
  const StoiVectors v = BuildStoiVectors();
  const char* dump = std::getenv("DAPTAIN_DUMP_STOI_VECTORS");
  TempDir tmp("stoi");
  const std::string dir = dump ? dump : tmp.path();

  const double expected[10] = {
      1.000000, 0.910371, 0.734837, 0.452910, 0.498637,
      0.568899, 0.999934, 0.850967, 0.034845, 0.031495,
  };
  for (int i = 0; i < 10; ++i) {
    char base[32];
    std::snprintf(base, sizeof base, "pair_%02d", i);
    const std::string cpath = dir + "/" + base + "_clean.wav";
    const std::string ppath = dir + "/" + base + "_proc.wav";
    WriteWav(cpath, v.cleans[static_cast<size_t>(i)], WavFormat::kPcm16);
    WriteWav(ppath, v.procs[static_cast<size_t>(i)], WavFormat::kPcm16);
    const double got = Stoi(ReadWav(cpath), ReadWav(ppath));
    INFO("pair " << i << " got " << got << " expected " << expected[i]);
    CHECK(std::abs(got - expected[i]) <= 0.01);
  }
}

TEST_CASE("stoi endpoints behave like an intelligibility score") {
  const StoiVectors v = BuildStoiVectors();
  CHECK(Stoi(v.cleans[0], v.procs[0]) >= 0.999);   // identity
  CHECK(Stoi(v.cleans[8], v.procs[8]) <= 0.2);     // pure noise
  const double s5 = Stoi(v.cleans[2], v.procs[2]);
  const double sm5 = Stoi(v.cleans[3], v.procs[3]);
  CHECK(s5 > sm5);  // more noise, less intelligible
}

TEST_CASE("stoi validates its inputs") {
  Rng rng(5);
  std::vector<float> x(32000);
  for (float& v : x) v = static_cast<float>(rng.Uniform(-0.5, 0.5));
  const AudioClip a = MakeClip(x);
  AudioClip b = a;
  b.sample_rate = 8000;
  CHECK_THROWS_AS(Stoi(a, b), ConfigError);
  AudioClip c = a;
  c.samples.pop_back();
  CHECK_THROWS_AS(Stoi(a, c), ConfigError);
  const AudioClip silent = MakeClip(std::vector<float>(32000, 0.0f));
  CHECK_THROWS_AS(Stoi(silent, a), DegenerateInputError);
  const AudioClip blip = MakeClip(std::vector<float>(500, 0.1f));
  CHECK_THROWS_AS(Stoi(blip, blip), DegenerateInputError);
}

TEST_CASE("fwsnrseg clamps at both extremes") {
  CorpusSpec spec;
  Rng rng(7);
  const AudioClip clean = SynthUtterance(spec, false, &rng);
  CHECK(FwSnrSeg(clean, clean) == doctest::Approx(35.0).epsilon(1e-9));
  const AudioClip silent =
      MakeClip(std::vector<float>(clean.samples.size(), 0.0f));
  CHECK(FwSnrSeg(clean, silent) == doctest::Approx(-10.0).epsilon(1e-9));
}

TEST_CASE("fwsnrseg strictly decreases as noise grows") {
  CorpusSpec spec;
  Rng rng(8);
  const AudioClip clean = SynthUtterance(spec, false, &rng);
  const AudioClip white = SynthNoise(
      "white", static_cast<int64_t>(clean.samples.size()), 16000, &rng);
  double prev = 1e9;
  for (double snr : {20.0, 10.0, 0.0, -10.0, -20.0}) {
    const double score = FwSnrSeg(clean, WithNoise(clean, white, snr));
    CHECK(score < prev);
    CHECK(score >= -10.0);
    CHECK(score <= 35.0);
    prev = score;
  }
}

TEST_CASE("fwsnrseg validates its inputs") {
  Rng rng(9);
  std::vector<float> x(16000);
  for (float& v : x) v = static_cast<float>(rng.Uniform(-0.5, 0.5));
  const AudioClip a = MakeClip(x);
  AudioClip b = a;
  b.sample_rate = 8000;
  CHECK_THROWS_AS(FwSnrSeg(a, b), ConfigError);
  AudioClip c = a;
  c.samples.resize(8000);
  CHECK_THROWS_AS(FwSnrSeg(a, c), ConfigError);
  const AudioClip silent = MakeClip(std::vector<float>(16000, 0.0f));
  CHECK_THROWS_AS(FwSnrSeg(silent, a), DegenerateInputError);
}

TEST_CASE("paired t-test matches the frozen oracle cases") {
  // Values from tests/oracle/ttest_reference.py (closed forms for dof 1-3,
  // mpmath beyond).
  struct Case {
    std::vector<double> d;
    double t;
    double p;
  };
  const std::vector<Case> cases = {
      {{1, 2, 3}, 3.46410161513775, 0.0741799002274486},
      {{1, 3}, 2.0, 0.295167235300867},
      {{2, 4, 6, 8}, 3.87298334620742, 0.030466291662171},
      {{0.3, -0.2, 0.5, 0.1, 0.4, -0.1, 0.2, 0.6, -0.3, 0.2},
       1.80199639601081, 0.105058153346658},
      {{10, 11, 12}, 19.0525588832576, 0.00274348939442592},
  };
  for (const Case& c : cases) {
    const std::vector<double> zeros(c.d.size(), 0.0);
    const TTestResult r = PairedTTest(c.d, zeros);
    CHECK(r.n_pairs == static_cast<int>(c.d.size()));
    CHECK(r.t_statistic == doctest::Approx(c.t).epsilon(1e-12));
    CHECK(std::abs(r.p_value - c.p) <= 1e-9);
    CHECK(r.significant == (c.p < 0.05));
  }
}

TEST_CASE("paired t-test is antisymmetric and guards degenerate input") {
  const std::vector<double> a = {1.2, 3.1, 0.4, 2.2, 1.9};
  const std::vector<double> b = {0.8, 2.9, 1.0, 1.5, 2.4};
  const TTestResult ab = PairedTTest(a, b);
  const TTestResult ba = PairedTTest(b, a);
  CHECK(ab.t_statistic == doctest::Approx(-ba.t_statistic).epsilon(1e-12));
  CHECK(ab.p_value == doctest::Approx(ba.p_value).epsilon(1e-12));

  CHECK_THROWS_AS(PairedTTest(a, a), DegenerateInputError);
  const std::vector<double> lo = {2.0, 4.0, 1.0, 3.0};
  const std::vector<double> hi = {3.0, 5.0, 2.0, 4.0};  // constant shift
  CHECK_THROWS_AS(PairedTTest(hi, lo), DegenerateInputError);
  CHECK_THROWS_AS(PairedTTest(a, {1.0}), ConfigError);
  CHECK_THROWS_AS(PairedTTest({1.0}, {2.0}), ConfigError);
}

TEST_CASE("null-hypothesis p-values stay near the nominal rate") {
  Rng rng(11);
  int rejections = 0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> a(20), b(20);
    for (int i = 0; i < 20; ++i) {
      a[static_cast<size_t>(i)] = rng.Normal();
      b[static_cast<size_t>(i)] = rng.Normal();
    }
    if (PairedTTest(a, b).p_value < 0.05) ++rejections;
  }
  const double rate = static_cast<double>(rejections) / trials;
  CHECK(rate >= 0.01);
  CHECK(rate <= 0.10);
}

std::vector<EvalRecord> GridRecords() {
  std::vector<EvalRecord> records;
  int k = 0;
  for (const char* method : {"unprocessed", "baseline"}) {
    for (const char* noise : {"white", "pink"}) {
      for (double snr : {0.0, 5.0}) {
        for (const char* id : {"t1", "t2"}) {
          EvalRecord r;
          r.id = id;
          r.noise_name = noise;
          r.snr_db = snr;
          r.method = method;
          r.stoi = 0.5 + 0.01 * k;
          r.fwsnrseg_db = 2.0 + 0.25 * k;
          records.push_back(r);
          ++k;
        }
      }
    }
  }
  return records;
}

TEST_CASE("aggregate builds the reporting grid with row averages") {
  const std::vector<EvalRecord> records = GridRecords();
  const ScoreTable table = AggregateScores(records, EvalMetric::kStoi);
  REQUIRE(table.methods == std::vector<std::string>{"unprocessed", "baseline"});
  REQUIRE(table.columns.size() == 4);
  CHECK(table.columns[0].first == "white");
  CHECK(table.columns[0].second == 0.0);
  // Cell (unprocessed, white, 0) averages records k = 0 and 1.
  CHECK(table.cells[0][0] == doctest::Approx(0.505).epsilon(1e-12));
  double mean = 0.0;
  for (double c : table.cells[1]) mean += c;
  CHECK(table.averages[1] == doctest::Approx(mean / 4).epsilon(1e-12));

  const ScoreTable one = AggregateScores({records[0]}, EvalMetric::kFwSnrSeg);
  REQUIRE(one.columns.size() == 1);
  CHECK(one.cells[0][0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(one.averages[0] == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(AggregateScores({}, EvalMetric::kStoi), ConfigError);
}

TEST_CASE("pairwise tests pair scores by utterance id") {
  std::vector<EvalRecord> records;
  for (int i = 0; i < 6; ++i) {
    EvalRecord r;
    r.id = "u" + std::to_string(i);
    r.noise_name = "white";
    r.snr_db = 0.0;
    r.method = "a";
    r.stoi = 0.5 + 0.02 * i;
    r.fwsnrseg_db = 3.0 + 0.5 * i;
    records.push_back(r);
    r.method = "b";
    r.stoi = 0.48 + 0.025 * i;
    r.fwsnrseg_db = 3.1 + 0.4 * i;
    if (i != 4) records.push_back(r);  // u4 exists only for method a
  }
  const std::vector<MethodPairTest> tests = PairwiseTests(records);
  REQUIRE(tests.size() == 2);  // one pair, two metrics
  for (const MethodPairTest& t : tests) {
    CHECK(t.valid);
    CHECK(t.test.n_pairs == 5);
  }

  // Identical scores across methods are degenerate, never a crash.
  std::vector<EvalRecord> same = records;
  for (EvalRecord& r : same) {
    r.stoi = 0.5;
    r.fwsnrseg_db = 3.0;
  }
  for (const MethodPairTest& t : PairwiseTests(same)) {
    CHECK_FALSE(t.valid);
    CHECK(t.note == "degenerate differences");
  }
}

TEST_CASE("csv writers produce the documented layouts") {
  TempDir tmp("report");
  const std::vector<EvalRecord> records = GridRecords();

  const std::string results = tmp.Sub("results.csv");
  WriteResultsCsv(results, records);
  std::ifstream in(results);
  std::string header;
  std::getline(in, header);
  CHECK(header == "id,noise,snr_db,method,stoi,fwsnrseg");
  CHECK(CountLines(results) == 17);  // header + 16 records

  const std::string pesq_path = tmp.Sub("pesq.txt");
  std::ofstream(pesq_path) << "t1 3.25\nt2 2.75\n";
  std::vector<EvalRecord> with_pesq = records;
  ApplyPesqScores(&with_pesq, ReadPesqScores(pesq_path));
  WriteResultsCsv(results, with_pesq);
  std::ifstream in2(results);
  std::getline(in2, header);
  CHECK(header == "id,noise,snr_db,method,stoi,fwsnrseg,pesq");

  std::ofstream(pesq_path) << "t1 not-a-number\n";
  CHECK_THROWS_AS(ReadPesqScores(pesq_path), IntegrityError);

  const std::string table_path = tmp.Sub("table.csv");
  WriteTableCsv(table_path, AggregateScores(records, EvalMetric::kStoi));
  std::ifstream tin(table_path);
  std::getline(tin, header);
  CHECK(header == "method,white_0,white_5,pink_0,pink_5,average");
  CHECK(CountLines(table_path) == 3);

  const std::string ttest_path = tmp.Sub("ttests.csv");
  WriteTTestCsv(ttest_path, PairwiseTests(records));
  std::ifstream ttin(ttest_path);
  std::getline(ttin, header);
  CHECK(header == "metric,method_a,method_b,n_pairs,t,p,significant");
}

TEST_CASE("spectrogram dump writes one row per frame") {
  Rng rng(13);
  std::vector<float> x(16000);
  for (float& v : x) v = static_cast<float>(rng.Uniform(-0.5, 0.5));
  const AudioClip clip = MakeClip(x);
  TempDir tmp("spec");
  const std::string path = tmp.Sub("spec.csv");
  WriteSpectrogramCsv(path, clip);
  // 32 ms window, 16 ms hop at 16 kHz: 1 + ceil((16000-512)/256) frames.
  CHECK(CountLines(path) == 62);
}

TEST_CASE("eval records validate their metric ranges") {
  EvalRecord r;
  r.id = "x";
  r.stoi = 0.5;
  r.fwsnrseg_db = 10.0;
  ValidateEvalRecord(r);
  r.stoi = 1.5;
  CHECK_THROWS_AS(ValidateEvalRecord(r), ConfigError);
  r.stoi = 0.5;
  r.fwsnrseg_db = 40.0;
  CHECK_THROWS_AS(ValidateEvalRecord(r), ConfigError);
}

}  // namespace
}  // namespace daptain
