// eval/report.cc

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

#include "eval/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "dsp/stft.h"
#include "util/error.h"

namespace daptain {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::ofstream OpenCsv(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

double MetricOf(const EvalRecord& r, EvalMetric metric) {
  return metric == EvalMetric::kStoi ? r.stoi : r.fwsnrseg_db;
}

const char* MetricName(EvalMetric metric) {
  return metric == EvalMetric::kStoi ? "stoi" : "fwsnrseg";
}

}  // namespace

void ValidateEvalRecord(const EvalRecord& r) {
  if (!(r.stoi >= 0.0 && r.stoi <= 1.0)) {
    throw ConfigError("eval record " + r.id + ": stoi out of [0, 1]");
  }
  if (!(r.fwsnrseg_db >= -10.0 && r.fwsnrseg_db <= 35.0)) {
    throw ConfigError("eval record " + r.id + ": fwsnrseg out of [-10, 35]");
  }
}

ScoreTable AggregateScores(const std::vector<EvalRecord>& records,
                           EvalMetric metric) {
  if (records.empty()) throw ConfigError("aggregate: no records");
  ScoreTable table;
  std::vector<std::string> noises;
  std::vector<double> snrs;
  for (const EvalRecord& r : records) {
    if (std::find(table.methods.begin(), table.methods.end(), r.method) ==
        table.methods.end()) {
      table.methods.push_back(r.method);
    }
    if (std::find(noises.begin(), noises.end(), r.noise_name) ==
        noises.end()) {
      noises.push_back(r.noise_name);
    }
    if (std::find(snrs.begin(), snrs.end(), r.snr_db) == snrs.end()) {
      snrs.push_back(r.snr_db);
    }
  }
  std::sort(snrs.begin(), snrs.end());
  for (const std::string& noise : noises) {
    for (double snr : snrs) table.columns.emplace_back(noise, snr);
  }

  table.cells.assign(table.methods.size(),
                     std::vector<double>(table.columns.size(), kNan));
  std::vector<std::vector<int>> counts(
      table.methods.size(), std::vector<int>(table.columns.size(), 0));
  for (const EvalRecord& r : records) {
    const size_t row = static_cast<size_t>(
        std::find(table.methods.begin(), table.methods.end(), r.method) -
        table.methods.begin());
    for (size_t col = 0; col < table.columns.size(); ++col) {
      if (table.columns[col].first != r.noise_name ||
          table.columns[col].second != r.snr_db) {
        continue;
      }
      if (counts[row][col] == 0) table.cells[row][col] = 0.0;
      table.cells[row][col] += MetricOf(r, metric);
      ++counts[row][col];
    }
  }
  for (size_t row = 0; row < table.methods.size(); ++row) {
    double sum = 0.0;
    int filled = 0;
    for (size_t col = 0; col < table.columns.size(); ++col) {
      if (counts[row][col] == 0) continue;
      table.cells[row][col] /= counts[row][col];
      sum += table.cells[row][col];
      ++filled;
    }
    table.averages.push_back(filled > 0 ? sum / filled : kNan);
  }
  return table;
}

std::vector<MethodPairTest> PairwiseTests(
    const std::vector<EvalRecord>& records) {
  std::vector<std::string> methods;
  for (const EvalRecord& r : records) {
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) {
      methods.push_back(r.method);
    }
  }
  std::vector<MethodPairTest> tests;
  for (EvalMetric metric : {EvalMetric::kStoi, EvalMetric::kFwSnrSeg}) {
    for (size_t i = 0; i < methods.size(); ++i) {
      for (size_t j = i + 1; j < methods.size(); ++j) {
        std::map<std::string, double> a, b;
        for (const EvalRecord& r : records) {
          if (r.method == methods[i]) a[r.id] = MetricOf(r, metric);
          if (r.method == methods[j]) b[r.id] = MetricOf(r, metric);
        }
        std::vector<double> va, vb;
        for (const auto& [id, score] : a) {
          const auto it = b.find(id);
          if (it == b.end()) continue;
          va.push_back(score);
          vb.push_back(it->second);
        }
        MethodPairTest t;
        t.metric = MetricName(metric);
        t.method_a = methods[i];
        t.method_b = methods[j];
        if (va.size() < 2) {
          t.note = "fewer than two common utterances";
        } else {
          try {
            t.test = PairedTTest(va, vb);
            t.valid = true;
          } catch (const DegenerateInputError& e) {
            t.note = "degenerate differences";
          }
        }
        tests.push_back(std::move(t));
      }
    }
  }
  return tests;
}

void WriteResultsCsv(const std::string& path,
                     const std::vector<EvalRecord>& records) {
  bool any_pesq = false;
  for (const EvalRecord& r : records) any_pesq = any_pesq || r.has_pesq;
  std::ofstream out = OpenCsv(path);
  out << "id,noise,snr_db,method,stoi,fwsnrseg";
  if (any_pesq) out << ",pesq";
  out << "\n";
  for (const EvalRecord& r : records) {
    out << r.id << ',' << r.noise_name << ',' << Num(r.snr_db) << ','
        << r.method << ',' << Num(r.stoi) << ',' << Num(r.fwsnrseg_db);
    if (any_pesq) {
      out << ',';
      if (r.has_pesq) out << Num(r.pesq);
    }
    out << "\n";
  }
  if (!out) throw IoError("cannot write " + path);
}

void WriteTableCsv(const std::string& path, const ScoreTable& table) {
  std::ofstream out = OpenCsv(path);
  out << "method";
  for (const auto& [noise, snr] : table.columns) {
    out << ',' << noise << '_' << Num(snr);
  }
  out << ",average\n";
  for (size_t row = 0; row < table.methods.size(); ++row) {
    out << table.methods[row];
    for (size_t col = 0; col < table.columns.size(); ++col) {
      out << ',';
      if (!std::isnan(table.cells[row][col])) out << Num(table.cells[row][col]);
    }
    out << ',';
    if (!std::isnan(table.averages[row])) out << Num(table.averages[row]);
    out << "\n";
  }
  if (!out) throw IoError("cannot write " + path);
}

void WriteTTestCsv(const std::string& path,
                   const std::vector<MethodPairTest>& tests) {
  std::ofstream out = OpenCsv(path);
  out << "metric,method_a,method_b,n_pairs,t,p,significant\n";
  for (const MethodPairTest& t : tests) {
    out << t.metric << ',' << t.method_a << ',' << t.method_b << ',';
    if (t.valid) {
      out << t.test.n_pairs << ',' << Num(t.test.t_statistic) << ','
          << Num(t.test.p_value) << ',' << (t.test.significant ? "yes" : "no");
    } else {
      out << "0,,," << t.note;
    }
    out << "\n";
  }
  if (!out) throw IoError("cannot write " + path);
}

void WriteSpectrogramCsv(const std::string& path, const AudioClip& clip) {
  const Stft s = SpeechStft(clip.samples.data(),
                            static_cast<int64_t>(clip.samples.size()),
                            clip.sample_rate);
  std::ofstream out = OpenCsv(path);
  for (int t = 0; t < s.num_frames; ++t) {
    for (int b = 0; b < s.num_bins; ++b) {
      if (b > 0) out << ',';
      out << Num(20.0 * std::log10(s.at(t, b) + 1e-12));
    }
    out << "\n";
  }
  if (!out) throw IoError("cannot write " + path);
}

std::map<std::string, double> ReadPesqScores(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::map<std::string, double> scores;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string id;
    double score = 0.0;
    if (!(ss >> id >> score)) {
      throw IntegrityError("pesq import: malformed line " +
                           std::to_string(line_no) + " in " + path);
    }
    scores[id] = score;
  }
  return scores;
}

void ApplyPesqScores(std::vector<EvalRecord>* records,
                     const std::map<std::string, double>& scores) {
  for (EvalRecord& r : *records) {
    const auto it = scores.find(r.id);
    if (it == scores.end()) continue;
    r.pesq = it->second;
    r.has_pesq = true;
  }
}

}  // namespace daptain
