// nn/rmsprop.h

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

#ifndef DAPTAIN_NN_RMSPROP_H_
#define DAPTAIN_NN_RMSPROP_H_

#include <cmath>
#include <string>
#include <vector>

#include "nn/params.h"
#include "nn/tensor.h"
#include "util/error.h"

namespace daptain {

struct RmsPropConfig {
  double learning_rate = 1e-3;
  double decay = 0.9;
  double epsilon = 1e-8;
};

// RMSprop with one accumulator per parameter:
//   acc <- decay * acc + (1 - decay) * g^2
//   p   <- p - lr * g / (sqrt(acc) + eps)
// A zero gradient still decays the accumulator but leaves p unchanged.
template <typename T>
class RmsProp {
 public:
  explicit RmsProp(RmsPropConfig cfg = {}) : cfg_(cfg) {
    if (cfg_.learning_rate <= 0 || cfg_.decay < 0 || cfg_.decay >= 1 ||
        cfg_.epsilon <= 0) {
      throw ConfigError("rmsprop: invalid configuration");
    }
  }

  void Step(ParamStore<T>* params) {
    if (acc_.empty()) {
      for (const std::string& name : params->names()) {
        acc_.emplace_back(params->value(name).shape);
      }
    }
    if (acc_.size() != params->size()) {
      throw ConfigError("rmsprop: parameter set changed between steps");
    }
    const T lr = static_cast<T>(cfg_.learning_rate);
    const T rho = static_cast<T>(cfg_.decay);
    const T eps = static_cast<T>(cfg_.epsilon);
    for (size_t pi = 0; pi < params->size(); ++pi) {
      const std::string& name = params->names()[pi];
      Tensor<T>& p = params->value(name);
      const Tensor<T>& g = params->grad(name);
      Tensor<T>& acc = acc_[pi];
      for (size_t i = 0; i < p.v.size(); ++i) {
        acc.v[i] = rho * acc.v[i] + (T{1} - rho) * g.v[i] * g.v[i];
        p.v[i] -= lr * g.v[i] / (std::sqrt(acc.v[i]) + eps);
      }
    }
  }

  // Accumulators persist across rate changes, so a decaying schedule can
  // update the rate between steps.
  void set_learning_rate(double lr) {
    if (lr <= 0) throw ConfigError("rmsprop: invalid configuration");
    cfg_.learning_rate = lr;
  }

  const std::vector<Tensor<T>>& accumulators() const { return acc_; }

 private:
  RmsPropConfig cfg_;
  std::vector<Tensor<T>> acc_;
};

}  // namespace daptain

#endif  // DAPTAIN_NN_RMSPROP_H_
