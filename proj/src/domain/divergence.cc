// domain/divergence.cc

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

#include "domain/divergence.h"

#include <cmath>
#include <string>

#include "util/error.h"

namespace daptain {

namespace {

void ValidateDistribution(const std::vector<double>& p, const char* name) {
  if (p.empty()) throw ConfigError(std::string("renyi2: empty ") + name);
  double sum = 0.0;
  for (double x : p) {
    if (!std::isfinite(x) || x < 0.0) {
      throw ConfigError(std::string("renyi2: invalid mass in ") + name);
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw ConfigError(std::string("renyi2: ") + name + " does not sum to 1");
  }
}

}  // namespace

double Renyi2Discrete(const std::vector<double>& p,
                      const std::vector<double>& q) {
  if (p.size() != q.size()) {
    throw ConfigError("renyi2: supports differ in size");
  }
  ValidateDistribution(p, "p");
  ValidateDistribution(q, "q");
  if (p == q) return 0.0;
  double acc = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) {
      throw DegenerateInputError("renyi2: q vanishes where p has mass");
    }
    acc += p[i] * p[i] / q[i];
  }
  return std::log(acc);
}

double Renyi2DiagonalGaussian(const std::vector<double>& mean_p,
                              const std::vector<double>& var_p,
                              const std::vector<double>& mean_q,
                              const std::vector<double>& var_q) {
  const size_t d = mean_p.size();
  if (var_p.size() != d || mean_q.size() != d || var_q.size() != d || d == 0) {
    throw ConfigError("renyi2: mismatched Gaussian dimensions");
  }
  double total = 0.0;
  for (size_t i = 0; i < d; ++i) {
    if (!(var_p[i] > 0.0) || !(var_q[i] > 0.0)) {
      throw ConfigError("renyi2: variances must be positive");
    }
    const double star = 2.0 * var_q[i] - var_p[i];
    if (star <= 0.0) {
      throw DegenerateInputError(
          "renyi2: divergence infinite (source variance too wide)");
    }
    const double gap = mean_p[i] - mean_q[i];
    total += gap * gap / star +
             0.5 * std::log(var_q[i] * var_q[i] / (var_p[i] * star));
  }
  return total;
}

double GeneralizationBound(const BoundInputs& b) {
  if (b.n < 1 || b.h < 1) throw ConfigError("bound: n and h must be >= 1");
  if (!(b.delta > 0.0) || b.delta > 1.0) {
    throw ConfigError("bound: delta must lie in (0, 1]");
  }
  if (!(b.d2 >= 0.0) || !std::isfinite(b.d2)) {
    throw ConfigError("bound: d2 must be a nonnegative real");
  }
  const double n = static_cast<double>(b.n);
  const double h = static_cast<double>(b.h);
  const double e = std::exp(1.0);
  if (h > n * e) {
    throw ConfigError("bound: capacity exceeds n*e, log argument below 1");
  }
  const double inner =
      (h / n) * std::log(n * e / h) + (1.0 / n) * std::log(4.0 / b.delta);
  return std::pow(b.d2, 4.0 / 5.0) * std::pow(inner, 8.0 / 3.0);
}

}  // namespace daptain
