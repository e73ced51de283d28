// domain/minimax.cc

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

#include "domain/minimax.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "domain/train.h"
#include "nn/graph.h"
#include "nn/rmsprop.h"
#include "util/error.h"

namespace daptain {

namespace {

double Clip(double v, double floor) {
  return std::min(1.0, std::max(floor, v));
}

double ClippedMean(const std::vector<double>& raw, double shift,
                   double floor) {
  double mean = 0.0;
  for (double v : raw) mean += Clip(v + shift, floor);
  return mean / static_cast<double>(raw.size());
}

}  // namespace

void ValidateMinimaxConfig(const MinimaxConfig& cfg) {
  if (!(cfg.epsilon > 0.0) || cfg.epsilon >= 1.0) {
    throw ConfigError("minimax: epsilon must lie in (0, 1)");
  }
  if (!(cfg.weight_floor > 0.0) || cfg.weight_floor > 1.0) {
    throw ConfigError("minimax: weight floor must lie in (0, 1]");
  }
  if (cfg.inner_steps < 1 || !(cfg.inner_step_size > 0.0)) {
    throw ConfigError("minimax: inner loop parameters must be positive");
  }
  if (cfg.penalty_coefficient < 0.0) {
    throw ConfigError("minimax: penalty coefficient must be nonnegative");
  }
}

WeightVector ProjectWeights(const std::vector<double>& raw,
                            const MinimaxConfig& cfg) {
  ValidateMinimaxConfig(cfg);
  if (raw.empty()) throw ConfigError("minimax: no weights to project");
  for (double v : raw) {
    if (!std::isfinite(v)) throw ConfigError("minimax: non-finite weight");
  }
  WeightVector out;
  out.mode = WeightMode::kMinimax;
  out.weights.resize(raw.size());

  const double plain_mean = ClippedMean(raw, 0.0, cfg.weight_floor);
  if (std::abs(plain_mean - 1.0) <= cfg.epsilon) {
    for (size_t i = 0; i < raw.size(); ++i) {
      out.weights[i] = Clip(raw[i], cfg.weight_floor);
    }
    return out;
  }
  if (plain_mean > 1.0 + cfg.epsilon) {
    // Unreachable: the box cap at 1 keeps the clipped mean at or below 1.
    throw ConfigError("minimax: clipped mean above the feasible band");
  }

  // Shift everything up until the clipped mean reaches the band's floor.
  const double target = 1.0 - cfg.epsilon;
  double lo = 0.0;
  double hi = 1.0 - *std::min_element(raw.begin(), raw.end());
  for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (ClippedMean(raw, mid, cfg.weight_floor) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  for (size_t i = 0; i < raw.size(); ++i) {
    out.weights[i] = Clip(raw[i] + hi, cfg.weight_floor);
  }
  CheckWeightInvariants(out, cfg.epsilon);
  return out;
}

MinimaxResult MinimaxWeights(const std::vector<double>& loss_per_sample,
                             const WeightVector& w_prev,
                             const MinimaxConfig& cfg) {
  ValidateMinimaxConfig(cfg);
  if (loss_per_sample.size() != w_prev.weights.size()) {
    throw ConfigError("minimax: loss and weight lengths differ");
  }
  for (double l : loss_per_sample) {
    if (!std::isfinite(l)) throw ConfigError("minimax: non-finite loss");
  }
  MinimaxResult result;
  std::vector<double> w = ProjectWeights(w_prev.weights, cfg).weights;
  std::vector<double> raw(w.size());
  for (int step = 0; step < cfg.inner_steps; ++step) {
    double violation = 0.0;
    for (size_t i = 0; i < w.size(); ++i) {
      raw[i] = w[i] + cfg.inner_step_size * loss_per_sample[i];
      const double over = std::max(0.0, raw[i] - 1.0);
      const double under = std::max(0.0, -raw[i]);
      violation += over * over + under * under;
    }
    result.penalty = cfg.penalty_coefficient * violation;
    w = ProjectWeights(raw, cfg).weights;
  }
  result.w.weights = std::move(w);
  result.w.mode = WeightMode::kMinimax;
  double acc = 0.0;
  for (size_t i = 0; i < result.w.weights.size(); ++i) {
    acc += result.w.weights[i] * loss_per_sample[i];
  }
  result.robust_loss = acc / static_cast<double>(result.w.weights.size());
  result.penalized_loss = result.robust_loss + result.penalty;
  return result;
}

double RobustObjective(const DomainClassifier& clf, const DomainBatch& source,
                       const DomainBatch& target,
                       const std::vector<double>& weights,
                       double feature_penalty) {
  const double bce = WeightedDomainLoss(clf, source, target, &weights);
  const int n = source.n(), d = source.dim();
  double pen = 0.0;
  for (int c = 0; c < d; ++c) {
    double gap = 0.0;
    for (int r = 0; r < n; ++r) {
      gap += (weights[static_cast<size_t>(r)] - 1.0) *
             static_cast<double>(
                 source.features.v[static_cast<size_t>(r) * d +
                                   static_cast<size_t>(c)]);
    }
    gap /= n;
    pen += gap * gap;
  }
  return bce - feature_penalty * pen;
}

RobustFitResult RobustBiasAwareFit(const DomainBatch& source,
                                   const DomainBatch& target,
                                   const MinimaxConfig& cfg,
                                   const RobustFitOptions& opt) {
  ValidateMinimaxConfig(cfg);
  ValidateBatch(source);
  ValidateBatch(target);
  if (source.dim() != target.dim()) {
    throw ConfigError("robust fit: source and target dimensions differ");
  }
  const int n = source.n(), m = target.n(), d = source.dim();
  const int total = n + m;

  ClassifierConfig ccfg;
  ccfg.input_dim = d;
  DomainClassifier clf(ccfg, opt.seed, "robust");

  Tensor<float> features({total, d});
  std::copy(source.features.v.begin(), source.features.v.end(),
            features.v.begin());
  std::copy(target.features.v.begin(), target.features.v.end(),
            features.v.begin() + static_cast<int64_t>(n) * d);
  std::vector<float> labels(static_cast<size_t>(total), 0.0f);
  for (int i = 0; i < n; ++i) labels[static_cast<size_t>(i)] = 1.0f;
  const double src_scale = static_cast<double>(total) / (2.0 * n);
  const double tgt_scale = static_cast<double>(total) / (2.0 * m);

  RmsPropConfig rms;
  rms.learning_rate = opt.learning_rate;
  rms.epsilon = opt.rms_epsilon;
  RmsProp<float> optimizer(rms);

  std::vector<double> omega(static_cast<size_t>(n), 1.0);
  const std::vector<double> uniform(static_cast<size_t>(n), 1.0);
  RobustFitResult result{std::move(clf), WeightVector{}, 0.0, {}, {}};
  int rises = 0;
  for (int epoch = 0; epoch < opt.epochs; ++epoch) {
    // A fixed rate leaves RMSprop cycling around the saddle once gradients
    // shrink; the decay lets the alternation settle.
    optimizer.set_learning_rate(opt.learning_rate / (1.0 + 0.02 * epoch));
    // Classifier descent on the current weighted loss.
    result.classifier.params().ZeroGrads();
    std::vector<float> u(static_cast<size_t>(total));
    for (int i = 0; i < n; ++i) {
      u[static_cast<size_t>(i)] =
          static_cast<float>(src_scale * omega[static_cast<size_t>(i)]);
    }
    for (int j = 0; j < m; ++j) {
      u[static_cast<size_t>(n + j)] = static_cast<float>(tgt_scale);
    }
    {
      Graph<float> g;
      const int x = g.ExternalLeaf(&features, nullptr);
      const int p = result.classifier.BuildProb(&g, x, false, 0.0f);
      const int loss = g.BceLoss(g.Reshape(p, {total}),
                                 Tensor<float>({total}, labels),
                                 Tensor<float>({total}, u));
      g.Backward(loss);
      optimizer.Step(&result.classifier.params());
    }

    // Weight ascent against the refreshed per-sample losses, adjusted by the
    // feature-expectation matching penalty gradient.
    const std::vector<double> probs =
        result.classifier.Predict(source.features);
    std::vector<double> gap(static_cast<size_t>(d), 0.0);
    for (int c = 0; c < d; ++c) {
      for (int r = 0; r < n; ++r) {
        gap[static_cast<size_t>(c)] +=
            (omega[static_cast<size_t>(r)] - 1.0) *
            static_cast<double>(
                source.features.v[static_cast<size_t>(r) * d +
                                  static_cast<size_t>(c)]);
      }
      gap[static_cast<size_t>(c)] /= n;
    }
    std::vector<double> scores(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
      const double p = std::max(1e-7, std::min(1.0 - 1e-7,
                                               probs[static_cast<size_t>(r)]));
      double dot = 0.0;
      for (int c = 0; c < d; ++c) {
        dot += static_cast<double>(
                   source.features.v[static_cast<size_t>(r) * d +
                                     static_cast<size_t>(c)]) *
               gap[static_cast<size_t>(c)];
      }
      scores[static_cast<size_t>(r)] =
          -std::log(p) / (2.0 * n) -
          opt.feature_penalty * 2.0 * dot / n;
    }
    WeightVector prev;
    prev.weights = omega;
    prev.mode = WeightMode::kMinimax;
    omega = MinimaxWeights(scores, prev, cfg).w.weights;

    const double robust =
        RobustObjective(result.classifier, source, target, omega,
                        opt.feature_penalty);
    result.epoch_uniform.push_back(RobustObjective(
        result.classifier, source, target, uniform, opt.feature_penalty));
    if (!result.epoch_robust.empty() &&
        robust > result.epoch_robust.back() + 1e-9) {
      if (++rises >= 10) {
        throw TrainingError("robust fit: objective rose for 10 epochs");
      }
    } else {
      rises = 0;
    }
    result.epoch_robust.push_back(robust);
    const size_t t = result.epoch_robust.size();
    if (t >= 6 &&
        std::abs(result.epoch_robust[t - 1] - result.epoch_robust[t - 6]) <
            1e-7) {
      break;
    }
  }
  result.weights.weights = std::move(omega);
  result.weights.mode = WeightMode::kMinimax;
  result.robust_loss = result.epoch_robust.back();
  return result;
}

}  // namespace daptain
