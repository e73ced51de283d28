// dsp/rasta.cc

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

#include "dsp/rasta.h"

#include <cmath>

#include "dsp/filterbank.h"
#include "dsp/stft.h"
#include "util/error.h"

namespace daptain {

namespace {

constexpr int kRate = 16000;
constexpr int kWin = 512;
constexpr int kHop = 256;
constexpr double kLogFloor = 1e-10;
constexpr double kPi = 3.14159265358979323846;

// Equal-loudness curve at angular frequency w = 2*pi*f.
double EqualLoudness(double f) {
  const double w2 = (2.0 * kPi * f) * (2.0 * kPi * f);
  const double num = (w2 + 56.8e6) * w2 * w2;
  const double den = (w2 + 6.3e6) * (w2 + 6.3e6) * (w2 + 0.38e9);
  return num / den;
}

// Autocorrelation lags 0..order of the auditory spectrum, treated as samples
// of an even spectrum on [0, pi] (inverse cosine transform).
std::vector<double> SpectrumToAutocorr(const std::vector<double>& bands,
                                       int order) {
  const int last = static_cast<int>(bands.size()) - 1;
  std::vector<double> r(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    double acc = bands[0] + ((k % 2 == 0) ? 1.0 : -1.0) * bands[static_cast<size_t>(last)];
    for (int j = 1; j < last; ++j) {
      acc += 2.0 * bands[static_cast<size_t>(j)] * std::cos(kPi * k * j / last);
    }
    r[static_cast<size_t>(k)] = acc / (2.0 * last);
  }
  return r;
}

// Levinson-Durbin: monic all-pole coefficients a[1..order] and the final
// prediction error.  Returns false on a non-positive error.
bool Levinson(const std::vector<double>& r, int order, std::vector<double>* a,
              double* err_out) {
  a->assign(static_cast<size_t>(order) + 1, 0.0);
  (*a)[0] = 1.0;
  double err = r[0];
  if (err <= 0.0) return false;
  for (int i = 1; i <= order; ++i) {
    double acc = r[static_cast<size_t>(i)];
    for (int j = 1; j < i; ++j) {
      acc += (*a)[static_cast<size_t>(j)] * r[static_cast<size_t>(i - j)];
    }
    const double k = -acc / err;
    std::vector<double> prev(*a);
    (*a)[static_cast<size_t>(i)] = k;
    for (int j = 1; j < i; ++j) {
      (*a)[static_cast<size_t>(j)] = prev[static_cast<size_t>(j)] +
                                     k * prev[static_cast<size_t>(i - j)];
    }
    err *= (1.0 - k * k);
    if (err <= 0.0) return false;
  }
  *err_out = err;
  return true;
}

// Cepstra from a monic all-pole polynomial: c0 = log(err), then the standard
// recursion c[i] = -a[i] - (1/i) sum_{j=1..i-1} (i-j) a[j] c[i-j].
std::vector<double> LpcToCepstra(const std::vector<double>& a, double err,
                                 int order) {
  std::vector<double> c(static_cast<size_t>(order) + 1);
  c[0] = std::log(err);
  for (int i = 1; i <= order; ++i) {
    double acc = 0.0;
    for (int j = 1; j < i; ++j) {
      acc += (i - j) * a[static_cast<size_t>(j)] * c[static_cast<size_t>(i - j)];
    }
    c[static_cast<size_t>(i)] = -a[static_cast<size_t>(i)] - acc / i;
  }
  return c;
}

}  // namespace

std::vector<std::vector<double>> BarkLogSpectra(const float* x, size_t n) {
  const Stft spec = ComputeStft(x, n, kWin, kHop, kWin);
  int num_bands = 0;
  const Filterbank fb = BarkFilterbank(spec.num_bins, kWin, kRate, &num_bands);

  std::vector<std::vector<double>> out(
      static_cast<size_t>(spec.num_frames),
      std::vector<double>(static_cast<size_t>(num_bands)));
  std::vector<double> power(static_cast<size_t>(spec.num_bins));
  for (int f = 0; f < spec.num_frames; ++f) {
    for (int j = 0; j < spec.num_bins; ++j) {
      const double m = spec.at(f, j);
      power[static_cast<size_t>(j)] = m * m;
    }
    const std::vector<double> bands = ApplyFilterbank(fb, power.data());
    for (int b = 0; b < num_bands; ++b) {
      const double e = bands[static_cast<size_t>(b)];
      out[static_cast<size_t>(f)][static_cast<size_t>(b)] =
          std::log(e > kLogFloor ? e : kLogFloor);
    }
  }
  return out;
}

std::vector<std::vector<double>> RastaFilter(
    const std::vector<std::vector<double>>& log_bands) {
  const size_t frames = log_bands.size();
  if (frames == 0) return {};
  const size_t bands = log_bands[0].size();
  std::vector<std::vector<double>> out(frames, std::vector<double>(bands));
  for (size_t b = 0; b < bands; ++b) {
    // x history seeded with frame 0 so a constant trajectory yields zero
    // output immediately; y history starts at zero.
    double x1 = log_bands[0][b], x2 = x1, x3 = x1, x4 = x1;
    double y1 = 0.0;
    for (size_t t = 0; t < frames; ++t) {
      const double xt = log_bands[t][b];
      const double yt = 0.98 * y1 + 0.1 * (2.0 * xt + x1 - x3 - 2.0 * x4);
      out[t][b] = yt;
      x4 = x3;
      x3 = x2;
      x2 = x1;
      x1 = xt;
      y1 = yt;
    }
  }
  return out;
}

std::vector<std::vector<double>> RastaPlp(const float* x, size_t n,
                                          int model_order) {
  if (model_order < 1) throw ConfigError("rasta: model order must be positive");
  const std::vector<std::vector<double>> logs = BarkLogSpectra(x, n);
  const std::vector<std::vector<double>> filtered = RastaFilter(logs);
  const int num_bands = static_cast<int>(filtered.empty() ? 0 : filtered[0].size());

  // Equal-loudness weights at the band center frequencies.
  const double bark_max = 6.0 * std::asinh((kRate / 2.0) / 600.0);
  std::vector<double> eql(static_cast<size_t>(num_bands));
  for (int b = 0; b < num_bands; ++b) {
    const double f = 600.0 * std::sinh(bark_max * b / (num_bands - 1) / 6.0);
    eql[static_cast<size_t>(b)] = EqualLoudness(f);
  }

  std::vector<std::vector<double>> out;
  out.reserve(filtered.size());
  std::vector<double> aud(static_cast<size_t>(num_bands));
  for (const std::vector<double>& frame : filtered) {
    for (int b = 0; b < num_bands; ++b) {
      const double v = std::exp(frame[static_cast<size_t>(b)]) *
                       eql[static_cast<size_t>(b)];
      aud[static_cast<size_t>(b)] = std::cbrt(v);
    }
    std::vector<double> r = SpectrumToAutocorr(aud, model_order);
    std::vector<double> a;
    double err = 0.0;
    if (!Levinson(r, model_order, &a, &err)) {
      r[0] *= 1.0 + 1e-9;
      if (!Levinson(r, model_order, &a, &err)) {
        throw DegenerateInputError("rasta: non-positive prediction error");
      }
    }
    out.push_back(LpcToCepstra(a, err, model_order));
  }
  return out;
}

}  // namespace daptain
