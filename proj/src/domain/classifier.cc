// domain/classifier.cc

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

#include "domain/classifier.h"

#include <utility>

#include "util/error.h"
#include "util/rng.h"

namespace daptain {

namespace {

const char* const kParamNames[] = {"embed.w1", "embed.b1", "embed.w2",
                                   "embed.b2", "head.w",   "head.b"};

}  // namespace

DomainClassifier::DomainClassifier(const ClassifierConfig& cfg, uint64_t seed,
                                   std::string role)
    : cfg_(cfg), role_(std::move(role)) {
  if (cfg.input_dim < 1 || cfg.hidden1 < 1 || cfg.hidden2 < 1) {
    throw ConfigError("classifier: dimensions must be positive");
  }
  Rng rng(seed);
  GlorotDense(&ps_.Create("embed.w1", {cfg.input_dim, cfg.hidden1}), &rng);
  ps_.Create("embed.b1", {cfg.hidden1});
  GlorotDense(&ps_.Create("embed.w2", {cfg.hidden1, cfg.hidden2}), &rng);
  ps_.Create("embed.b2", {cfg.hidden2});
  GlorotDense(&ps_.Create("head.w", {cfg.hidden2, 1}), &rng);
  ps_.Create("head.b", {1});
}

int DomainClassifier::BuildProbInternal(Graph<float>* g, int x,
                                        bool adversarial, float beta,
                                        bool with_grads) const {
  ParamStore<float>* sink =
      with_grads ? const_cast<ParamStore<float>*>(&ps_) : nullptr;
  int ids[6];
  for (int i = 0; i < 6; ++i) {
    ids[i] = g->ExternalLeaf(&ps_.value(kParamNames[i]),
                             sink != nullptr ? &sink->grad(kParamNames[i])
                                             : nullptr);
  }
  const int h1 = g->LeakyRelu(g->Dense(x, ids[0], ids[1]), 0.1f);
  const int h2 = g->LeakyRelu(g->Dense(h1, ids[2], ids[3]), 0.1f);
  const int head_in = adversarial ? g->GradReverse(h2, beta) : h2;
  return g->Sigmoid(g->Dense(head_in, ids[4], ids[5]));
}

int DomainClassifier::BuildProb(Graph<float>* g, int x, bool adversarial,
                                float beta) {
  return BuildProbInternal(g, x, adversarial, beta, true);
}

std::vector<double> DomainClassifier::Predict(const Tensor<float>& x) const {
  if (x.rank() != 2 || x.dim(1) != cfg_.input_dim) {
    throw ConfigError("classifier: input must be [n, " +
                      std::to_string(cfg_.input_dim) + "]");
  }
  Graph<float> g;
  const int xin = g.ExternalLeaf(&x, nullptr);
  const int p = BuildProbInternal(&g, xin, false, 0.0f, false);
  const Tensor<float>& pv = g.value(p);
  std::vector<double> out(pv.v.size());
  for (size_t i = 0; i < pv.v.size(); ++i) {
    out[i] = static_cast<double>(pv.v[i]);
  }
  return out;
}

void DomainClassifier::CopyEmbeddingFrom(const DomainClassifier& other) {
  for (const char* name : {"embed.w1", "embed.b1", "embed.w2", "embed.b2"}) {
    Tensor<float>& dst = ps_.value(name);
    const Tensor<float>& src = other.ps_.value(name);
    if (!dst.SameShape(src)) {
      throw ConfigError("classifier: embedding shapes differ");
    }
    dst.v = src.v;
  }
}

int64_t DomainClassifier::HeadParamCount() const {
  return ps_.value("head.w").numel() + ps_.value("head.b").numel();
}

}  // namespace daptain
