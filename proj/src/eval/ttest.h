// eval/ttest.h

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

#ifndef DAPTAIN_EVAL_TTEST_H_
#define DAPTAIN_EVAL_TTEST_H_

#include <vector>

namespace daptain {

struct TTestResult {
  double t_statistic = 0.0;
  double p_value = 1.0;
  int n_pairs = 0;
  bool significant = false;  // p_value < 0.05
};

// Two-sided paired t-test: t = mean(d) / (sd(d) / sqrt(n)) with the n-1
// sample standard deviation, p from Student's t distribution with n-1
// degrees of freedom.  Throws ConfigError when the vectors differ in length
// or n < 2, and DegenerateInputError when the differences have zero
// variance (including a == b).
TTestResult PairedTTest(const std::vector<double>& a,
                        const std::vector<double>& b);

// Two-sided p for |t| with dof degrees of freedom, evaluated through the
// regularized incomplete beta function (continued fraction, absolute error
// well under 1e-9).
double StudentTwoSidedP(double t, int dof);

}  // namespace daptain

#endif  // DAPTAIN_EVAL_TTEST_H_
