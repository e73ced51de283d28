// nn/params.h

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

#ifndef DAPTAIN_NN_PARAMS_H_
#define DAPTAIN_NN_PARAMS_H_

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nn/tensor.h"
#include "util/error.h"
#include "util/rng.h"

namespace daptain {

// Named parameter tensors with aligned gradient slots.  Iteration follows
// insertion order, so serialization and optimizer sweeps are deterministic.
template <typename T>
class ParamStore {
 public:
  Tensor<T>& Create(const std::string& name, std::vector<int> shape) {
    if (index_.count(name) != 0) {
      throw ConfigError("param store: duplicate parameter " + name);
    }
    index_[name] = static_cast<int>(names_.size());
    names_.push_back(name);
    values_.emplace_back(shape);
    grads_.emplace_back(std::move(shape));
    return values_.back();
  }

  bool Has(const std::string& name) const { return index_.count(name) != 0; }

  Tensor<T>& value(const std::string& name) { return values_[At(name)]; }
  const Tensor<T>& value(const std::string& name) const {
    return values_[At(name)];
  }
  Tensor<T>& grad(const std::string& name) { return grads_[At(name)]; }
  const Tensor<T>& grad(const std::string& name) const {
    return grads_[At(name)];
  }

  const std::vector<std::string>& names() const { return names_; }
  size_t size() const { return names_.size(); }

  int64_t TotalNumel() const {
    int64_t total = 0;
    for (const Tensor<T>& t : values_) total += t.numel();
    return total;
  }

  void ZeroGrads() {
    for (Tensor<T>& g : grads_) {
      std::fill(g.v.begin(), g.v.end(), T{0});
    }
  }

 private:
  size_t At(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw ConfigError("param store: unknown parameter " + name);
    }
    return static_cast<size_t>(it->second);
  }

  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<Tensor<T>> values_;
  std::vector<Tensor<T>> grads_;
};

// Glorot uniform fill: +/- sqrt(6 / (fan_in + fan_out)).
template <typename T>
void GlorotFill(Tensor<T>* w, int fan_in, int fan_out, Rng* rng) {
  if (fan_in <= 0 || fan_out <= 0) {
    throw ConfigError("glorot: fans must be positive");
  }
  const double limit = std::sqrt(6.0 / (fan_in + fan_out));
  for (T& x : w->v) {
    x = static_cast<T>(rng->Uniform(-limit, limit));
  }
}

// Dense weight [d_in, d_out]: fans are the matrix dimensions.
template <typename T>
void GlorotDense(Tensor<T>* w, Rng* rng) {
  if (w->rank() != 2) throw ConfigError("glorot: dense weight must be rank 2");
  GlorotFill(w, w->dim(0), w->dim(1), rng);
}

// Conv kernel [C_out, C_in, K]: fan_in = C_in * K, fan_out = C_out * K.
template <typename T>
void GlorotConv(Tensor<T>* w, Rng* rng) {
  if (w->rank() != 3) throw ConfigError("glorot: conv kernel must be rank 3");
  GlorotFill(w, w->dim(1) * w->dim(2), w->dim(0) * w->dim(2), rng);
}

}  // namespace daptain

#endif  // DAPTAIN_NN_PARAMS_H_
