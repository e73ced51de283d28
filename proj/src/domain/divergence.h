// domain/divergence.h

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

#ifndef DAPTAIN_DOMAIN_DIVERGENCE_H_
#define DAPTAIN_DOMAIN_DIVERGENCE_H_

#include <cstdint>
#include <vector>

namespace daptain {

// Second-order Renyi divergence log sum p(x)^2 / q(x) over a shared finite
// support (natural log).  Identical inputs give exactly 0.
double Renyi2Discrete(const std::vector<double>& p,
                      const std::vector<double>& q);

// Closed form for diagonal Gaussians.  Requires 2 var_q - var_p > 0 in every
// dimension; otherwise the divergence is infinite and an error is thrown.
double Renyi2DiagonalGaussian(const std::vector<double>& mean_p,
                              const std::vector<double>& var_p,
                              const std::vector<double>& mean_q,
                              const std::vector<double>& var_q);

struct BoundInputs {
  double d2 = 0.0;     // second-order Renyi divergence estimate
  int64_t n = 1;       // source sample count
  int64_t h = 1;       // capacity surrogate (head parameter count)
  double delta = 0.05; // confidence level in (0, 1]
};

// Diagnostic half-gap bound:
//   d2^(4/5) * ((h/n) log(n e / h) + (1/n) log(4 / delta))^(8/3).
// Never used to gate training.
double GeneralizationBound(const BoundInputs& b);

}  // namespace daptain

#endif  // DAPTAIN_DOMAIN_DIVERGENCE_H_
