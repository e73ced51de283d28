// eval/report.h

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

#ifndef DAPTAIN_EVAL_REPORT_H_
#define DAPTAIN_EVAL_REPORT_H_

#include <map>
#include <string>
#include <vector>

#include "audio/wav.h"
#include "eval/ttest.h"

namespace daptain {

// One scored utterance under one enhancement method.  pesq is NaN unless an
// external scorer's output was imported.
struct EvalRecord {
  std::string id;
  std::string noise_name;
  double snr_db = 0.0;
  std::string method;
  double stoi = 0.0;
  double fwsnrseg_db = 0.0;
  double pesq = 0.0;
  bool has_pesq = false;
};

// stoi in [0, 1] and fwsnrseg within the segment clamp; ConfigError
// otherwise.
void ValidateEvalRecord(const EvalRecord& r);

enum class EvalMetric { kStoi, kFwSnrSeg };

// Mean-score grid in the reporting shape: methods as rows, noise x SNR
// cells as columns (noises in first-appearance order, SNRs ascending), and
// a trailing Average over the filled cells of each row.
struct ScoreTable {
  std::vector<std::string> methods;
  std::vector<std::pair<std::string, double>> columns;  // (noise, snr_db)
  std::vector<std::vector<double>> cells;  // [method][column], NaN = empty
  std::vector<double> averages;            // one per method
};

// Throws ConfigError on an empty record list.
ScoreTable AggregateScores(const std::vector<EvalRecord>& records,
                           EvalMetric metric);

// One method-pair comparison on one metric, paired per utterance id.
// valid is false when fewer than two common ids exist or the differences
// are degenerate; note carries the reason.
struct MethodPairTest {
  std::string metric;
  std::string method_a;
  std::string method_b;
  TTestResult test;
  bool valid = false;
  std::string note;
};

// Every unordered method pair on both metrics, ids paired lexicographically.
std::vector<MethodPairTest> PairwiseTests(
    const std::vector<EvalRecord>& records);

// CSV writers; all throw IoError when the file cannot be written.
void WriteResultsCsv(const std::string& path,
                     const std::vector<EvalRecord>& records);
void WriteTableCsv(const std::string& path, const ScoreTable& table);
void WriteTTestCsv(const std::string& path,
                   const std::vector<MethodPairTest>& tests);

// Magnitude spectrogram as a frames x bins CSV of dB values (32 ms / 16 ms
// speech framing), ready for external plotting.
void WriteSpectrogramCsv(const std::string& path, const AudioClip& clip);

// External PESQ import: one "id score" line per utterance.  Unknown ids are
// ignored by ApplyPesqScores; malformed lines raise IntegrityError.
std::map<std::string, double> ReadPesqScores(const std::string& path);
void ApplyPesqScores(std::vector<EvalRecord>* records,
                     const std::map<std::string, double>& scores);

}  // namespace daptain

#endif  // DAPTAIN_EVAL_REPORT_H_
