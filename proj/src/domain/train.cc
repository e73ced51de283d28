// domain/train.cc

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

#include "domain/train.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nn/graph.h"
#include "nn/rmsprop.h"
#include "util/error.h"

namespace daptain {

namespace {

struct CombinedBatch {
  Tensor<float> features;       // [n + m, d]
  std::vector<float> labels;    // 1 for source rows, 0 for target rows
  std::vector<float> weights;   // per-domain balancing times source omega
};

// Stacks the batches with per-sample weights (n+m)/(2n) * omega_i for source
// and (n+m)/(2m) for target, so each domain carries half the objective and
// the converged loss of indistinguishable domains is log(2).
CombinedBatch Combine(const DomainBatch& source, const DomainBatch& target,
                      const std::vector<double>* source_weights) {
  ValidateBatch(source);
  ValidateBatch(target);
  if (source.dim() != target.dim()) {
    throw ConfigError("train: source and target dimensions differ");
  }
  const int n = source.n(), m = target.n(), d = source.dim();
  if (source_weights != nullptr &&
      source_weights->size() != static_cast<size_t>(n)) {
    throw ConfigError("train: one weight per source sample required");
  }
  CombinedBatch out;
  out.features = Tensor<float>({n + m, d});
  std::copy(source.features.v.begin(), source.features.v.end(),
            out.features.v.begin());
  std::copy(target.features.v.begin(), target.features.v.end(),
            out.features.v.begin() + static_cast<int64_t>(n) * d);
  out.labels.assign(static_cast<size_t>(n + m), 0.0f);
  out.weights.assign(static_cast<size_t>(n + m), 0.0f);
  const double src_scale = static_cast<double>(n + m) / (2.0 * n);
  const double tgt_scale = static_cast<double>(n + m) / (2.0 * m);
  for (int i = 0; i < n; ++i) {
    out.labels[static_cast<size_t>(i)] = 1.0f;
    const double w =
        source_weights != nullptr ? (*source_weights)[static_cast<size_t>(i)]
                                  : 1.0;
    out.weights[static_cast<size_t>(i)] = static_cast<float>(src_scale * w);
  }
  for (int j = 0; j < m; ++j) {
    out.weights[static_cast<size_t>(n + j)] = static_cast<float>(tgt_scale);
  }
  return out;
}

}  // namespace

DomainTrainStats TrainDomainClassifier(
    DomainClassifier* clf, const DomainBatch& source, const DomainBatch& target,
    const std::vector<double>* source_weights, bool adversarial,
    const DomainTrainOptions& opt) {
  if (opt.epochs < 1) throw ConfigError("train: epochs must be positive");
  const CombinedBatch batch = Combine(source, target, source_weights);
  const int total = batch.features.dim(0);

  RmsPropConfig rms;
  rms.learning_rate = opt.learning_rate;
  RmsProp<float> optimizer(rms);

  DomainTrainStats stats;
  int violations = 0;
  for (int epoch = 0; epoch < opt.epochs; ++epoch) {
    clf->params().ZeroGrads();
    Graph<float> g;
    const int x = g.ExternalLeaf(&batch.features, nullptr);
    const int p = clf->BuildProb(&g, x, adversarial, opt.beta);
    const int flat = g.Reshape(p, {total});
    const int loss = g.BceLoss(flat, Tensor<float>({total}, batch.labels),
                               Tensor<float>({total}, batch.weights));
    stats.losses.push_back(static_cast<double>(g.scalar(loss)));
    g.Backward(loss);
    optimizer.Step(&clf->params());

    // With the adversarial reversal active the loss is a saddle objective
    // and is allowed to rise while the embedding fights the head.
    if (!adversarial && epoch >= 5 &&
        stats.losses[static_cast<size_t>(epoch)] >
            stats.losses[static_cast<size_t>(epoch - 5)] + 1e-7) {
      if (++violations >= 2) {
        stats.early_stopped = true;
        break;
      }
    }
  }
  stats.final_loss = WeightedDomainLoss(*clf, source, target, source_weights);
  return stats;
}

DomainClassifier TrainClassifierC(const DomainBatch& source,
                                  const DomainBatch& target, int epochs,
                                  uint64_t seed) {
  ValidateBatch(source);
  ClassifierConfig cfg;
  cfg.input_dim = source.dim();
  DomainClassifier clf(cfg, seed, "C");
  DomainTrainOptions opt;
  opt.epochs = epochs;
  TrainDomainClassifier(&clf, source, target, nullptr, false, opt);
  return clf;
}

C2Result TrainClassifierC2(DomainClassifier* c2, const DomainBatch& source,
                           const DomainBatch& target, const WeightVector& w,
                           bool adversarial, const DomainTrainOptions& opt) {
  if (w.mode != WeightMode::kIw && w.mode != WeightMode::kUniform) {
    throw ConfigError("train: c2 expects iw or uniform weights");
  }
  CheckWeightInvariants(w, 0.0);
  C2Result result;
  result.stats =
      TrainDomainClassifier(c2, source, target, &w.weights, adversarial, opt);
  result.js_estimate = std::log(2.0) - result.stats.final_loss;
  return result;
}

double WeightedDomainLoss(const DomainClassifier& clf,
                          const DomainBatch& source, const DomainBatch& target,
                          const std::vector<double>* source_weights) {
  const CombinedBatch batch = Combine(source, target, source_weights);
  const std::vector<double> probs = clf.Predict(batch.features);
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    double p = probs[i];
    if (p < 1e-7) p = 1e-7;
    if (p > 1.0 - 1e-7) p = 1.0 - 1e-7;
    const double y = static_cast<double>(batch.labels[i]);
    acc -= static_cast<double>(batch.weights[i]) *
           (y * std::log(p) + (1.0 - y) * std::log(1.0 - p));
  }
  return acc / static_cast<double>(probs.size());
}

}  // namespace daptain
