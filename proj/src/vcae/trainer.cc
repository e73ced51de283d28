// vcae/trainer.cc

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

#include "vcae/trainer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <numeric>
#include <string>
#include <utility>

#include "domain/minimax.h"
#include "domain/train.h"
#include "domain/weights.h"
#include "nn/graph.h"
#include "nn/rmsprop.h"
#include "util/error.h"
#include "util/log.h"
#include "util/rng.h"
#include "vcae/builder.h"
#include "vcae/objective.h"
#include "vcae/overfit.h"

namespace daptain {

namespace {

uint64_t DeriveSeed(uint64_t seed, uint64_t tag) {
  return (seed + 0x9e3779b97f4a7c15ULL) * (2 * tag + 1);
}

Tensor<float> GatherRows(const Tensor<float>& src,
                         const std::vector<int>& order, int begin, int count) {
  const int cols = src.dim(1);
  Tensor<float> out({count, cols});
  for (int i = 0; i < count; ++i) {
    const int row = order[static_cast<size_t>(begin + i)];
    std::copy_n(src.v.begin() + static_cast<int64_t>(row) * cols, cols,
                out.v.begin() + static_cast<int64_t>(i) * cols);
  }
  return out;
}

double SumVariance(const Tensor<float>& z) {
  const int n = z.dim(0), d = z.dim(1);
  double total = 0.0;
  for (int c = 0; c < d; ++c) {
    double mean = 0.0;
    for (int r = 0; r < n; ++r) {
      mean += static_cast<double>(
          z.v[static_cast<size_t>(r) * d + static_cast<size_t>(c)]);
    }
    mean /= n;
    double var = 0.0;
    for (int r = 0; r < n; ++r) {
      const double dev =
          static_cast<double>(
              z.v[static_cast<size_t>(r) * d + static_cast<size_t>(c)]) -
          mean;
      var += dev * dev;
    }
    total += var / n;
  }
  return total;
}

double WeightL2(const ParamStore<float>& ps) {
  double acc = 0.0;
  for (const std::string& name : ps.names()) {
    if (name.size() < 2 || name.compare(name.size() - 2, 2, ".w") != 0) {
      continue;
    }
    for (float w : ps.value(name).v) {
      acc += static_cast<double>(w) * static_cast<double>(w);
    }
  }
  return acc;
}

std::string JsonNumber(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void AppendLogLine(std::ofstream* log, const EpochStats& s) {
  if (log == nullptr || !log->is_open()) return;
  *log << "{\"epoch\": " << s.epoch
       << ", \"train_loss\": " << JsonNumber(s.train_loss)
       << ", \"val_loss\": " << (s.has_val ? JsonNumber(s.val_loss) : "null")
       << ", \"mean_omega\": " << JsonNumber(s.mean_omega)
       << ", \"js_estimate\": "
       << (s.has_js ? JsonNumber(s.js_estimate) : "null")
       << ", \"variance_gap\": "
       << (s.has_val ? JsonNumber(s.variance_gap) : "null")
       << ", \"normalized\": " << (s.normalized ? "true" : "false") << "}\n";
  log->flush();
}

double MeanOf(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

// Validation objective: unweighted reconstruction error plus the variance
// gap over the whole validation set and the L2 term.
struct ValResult {
  double loss = 0.0;
  double variance_gap = 0.0;
};

ValResult EvaluateValidation(const VcaeModel& model, const TrainData& data,
                             const VcaeObjectiveConfig& obj, int batch_size) {
  const int m = data.val_blocks.dim(0);
  const int in_len = model.arch().input_len;
  const int out_len = model.arch().output_len;
  Tensor<float> latents({m, model.arch().latent_dim});
  double mse_acc = 0.0;
  for (int start = 0; start < m; start += batch_size) {
    const int count = std::min(batch_size, m - start);
    Tensor<float> batch({count, in_len});
    std::copy_n(
        data.val_blocks.v.begin() + static_cast<int64_t>(start) * in_len,
        static_cast<int64_t>(count) * in_len, batch.v.begin());
    const Tensor<float> z = model.Encode(batch);
    std::copy(z.v.begin(), z.v.end(),
              latents.v.begin() +
                  static_cast<int64_t>(start) * model.arch().latent_dim);
    const Tensor<float> recon = model.Decode(z);
    for (int i = 0; i < count; ++i) {
      double se = 0.0;
      const float* pp = recon.v.data() + static_cast<int64_t>(i) * out_len;
      const float* tt = data.val_targets.v.data() +
                        static_cast<int64_t>(start + i) * out_len;
      for (int j = 0; j < out_len; ++j) {
        const double diff =
            static_cast<double>(pp[j]) - static_cast<double>(tt[j]);
        se += diff * diff;
      }
      mse_acc += se / out_len;
    }
  }
  ValResult r;
  const double svar = SumVariance(latents);
  r.variance_gap = svar - obj.target_variance;
  r.loss = mse_acc / m + obj.lambda * std::abs(r.variance_gap) +
           obj.reg * WeightL2(model.params());
  return r;
}

}  // namespace

TrainResult TrainVcae(const TrainData& data, const VcaeArchitecture& arch,
                      const TrainingConfig& cfg, const TrainPaths& paths) {
  ValidateArchitecture(arch);
  ValidateTrainingConfig(cfg);
  if (data.train_blocks.rank() != 2 || data.train_blocks.dim(0) < 1) {
    throw ConfigError("vcae train: no training blocks");
  }
  const int n_train = data.train_blocks.dim(0);
  if (data.train_blocks.dim(1) != arch.input_len ||
      data.train_targets.rank() != 2 ||
      data.train_targets.dim(0) != n_train ||
      data.train_targets.dim(1) != arch.output_len) {
    throw ConfigError("vcae train: block shapes do not match architecture");
  }
  const bool needs_domains = cfg.method != TrainMethod::kBaseline;
  if (needs_domains &&
      (data.source_features.n() != n_train || data.target_features.n() < 1)) {
    throw ConfigError("vcae train: domain descriptors missing or misaligned");
  }
  const bool has_val =
      data.val_blocks.rank() == 2 && data.val_blocks.dim(0) >= 1;

  TrainResult result{VcaeModel(arch, cfg.seed), {}};
  VcaeModel& model = result.model;
  RmsProp<float> optimizer(
      RmsPropConfig{cfg.learning_rate, 0.9, 1e-8});
  const VcaeObjectiveConfig obj{cfg.lambda, cfg.target_variance, cfg.reg};

  std::ofstream log;
  if (!paths.log_path.empty()) {
    log.open(paths.log_path, std::ios::trunc);
    if (!log.is_open()) {
      throw IoError("cannot open training log: " + paths.log_path);
    }
  }

  // Per-block reconstruction losses from the previous epoch; the minimax
  // ascent maximizes against these (zeros before the first pass).
  std::vector<double> block_losses(static_cast<size_t>(n_train), 0.0);
  std::vector<double> val_history;
  bool normalize_active = false;
  std::unique_ptr<DomainClassifier> shared_embedding;
  WeightVector w = UniformWeights(n_train);

  std::vector<int> order(static_cast<size_t>(n_train));
  std::iota(order.begin(), order.end(), 0);

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    EpochStats stats;
    stats.epoch = epoch;
    stats.normalized = normalize_active;

    if (cfg.method == TrainMethod::kIw) {
      ClassifierConfig ccfg;
      ccfg.input_dim = data.source_features.dim();
      DomainClassifier c(ccfg, DeriveSeed(cfg.seed, 2 * epoch), "C");
      if (shared_embedding != nullptr) c.CopyEmbeddingFrom(*shared_embedding);
      DomainTrainOptions copt;
      TrainDomainClassifier(&c, data.source_features, data.target_features,
                            nullptr, false, copt);
      w = ImportanceWeights(c, data.source_features);

      DomainClassifier c2(ccfg, DeriveSeed(cfg.seed, 2 * epoch + 1), "C2");
      c2.CopyEmbeddingFrom(c);
      DomainTrainOptions c2opt;
      c2opt.beta = static_cast<float>(cfg.adversarial_beta);
      const C2Result r2 =
          TrainClassifierC2(&c2, data.source_features, data.target_features,
                            w, cfg.adversarial_beta > 0, c2opt);
      stats.js_estimate = r2.js_estimate;
      stats.has_js = true;
      shared_embedding = std::make_unique<DomainClassifier>(c2);
    } else if (cfg.method == TrainMethod::kMinimax) {
      MinimaxConfig mm;
      RobustFitOptions ro;
      ro.seed = DeriveSeed(cfg.seed, 3 * epoch);
      const RobustFitResult rf =
          RobustBiasAwareFit(data.source_features, data.target_features, mm,
                             ro);
      w = MinimaxWeights(block_losses, rf.weights, mm).w;
    } else {
      w = UniformWeights(n_train);
    }
    stats.mean_omega = MeanOf(w.weights);

    Rng shuffle_rng = Rng(cfg.seed).Fork(static_cast<uint64_t>(epoch));
    shuffle_rng.Shuffle(&order);

    double loss_acc = 0.0;
    int batch_index = 0;
    for (int start = 0; start < n_train; start += cfg.batch_size, ++batch_index) {
      const int count = std::min(cfg.batch_size, n_train - start);
      Tensor<float> batch = GatherRows(data.train_blocks, order, start, count);
      Tensor<float> target = GatherRows(data.train_targets, order, start, count);
      Tensor<float> wts({count});
      for (int i = 0; i < count; ++i) {
        wts.v[static_cast<size_t>(i)] = static_cast<float>(
            w.weights[static_cast<size_t>(order[static_cast<size_t>(start + i)])]);
      }
      try {
        Graph<float> g;
        std::vector<int> weight_ids;
        const int x = g.Leaf(std::move(batch));
        int z = BuildVcaeEncoder(&g, &model.params(), arch, x, true,
                                 &weight_ids);
        if (normalize_active && count >= 2) {
          z = g.NormalizeLatent(z, static_cast<float>(cfg.target_variance));
        }
        const int recon =
            BuildVcaeDecoder(&g, &model.params(), arch, z, true, &weight_ids);

        const Tensor<float>& rv = g.value(recon);
        for (int i = 0; i < count; ++i) {
          double se = 0.0;
          const float* pp =
              rv.v.data() + static_cast<int64_t>(i) * arch.output_len;
          const float* tt =
              target.v.data() + static_cast<int64_t>(i) * arch.output_len;
          for (int j = 0; j < arch.output_len; ++j) {
            const double diff =
                static_cast<double>(pp[j]) - static_cast<double>(tt[j]);
            se += diff * diff;
          }
          block_losses[static_cast<size_t>(
              order[static_cast<size_t>(start + i)])] = se / arch.output_len;
        }

        const int loss = BuildVcaeObjective(&g, recon, std::move(target),
                                            std::move(wts), z, obj, weight_ids);
        const double loss_val = static_cast<double>(g.scalar(loss));
        loss_acc += loss_val * count;
        model.params().ZeroGrads();
        g.Backward(loss);
        optimizer.Step(&model.params());
      } catch (const TrainingError& e) {
        throw TrainingError("vcae training failed at epoch " +
                            std::to_string(epoch) + " batch " +
                            std::to_string(batch_index) + ": " + e.what());
      }
    }
    stats.train_loss = loss_acc / n_train;

    if (has_val) {
      const ValResult vr = EvaluateValidation(model, data, obj, 256);
      stats.val_loss = vr.loss;
      stats.variance_gap = vr.variance_gap;
      stats.has_val = true;
      val_history.push_back(vr.loss);
      normalize_active = DetectOverfit(val_history, cfg.patience);
    }

    AppendLogLine(paths.log_path.empty() ? nullptr : &log, stats);
    if (!paths.checkpoint_path.empty()) {
      SaveVcae(paths.checkpoint_path, model);
    }
    DAPTAIN_INFO << "epoch " << epoch << " method " << TrainMethodName(cfg.method)
                 << " train_loss " << stats.train_loss
                 << (stats.has_val ? " val_loss " + JsonNumber(stats.val_loss)
                                   : "")
                 << " mean_omega " << stats.mean_omega;
    result.history.push_back(stats);
  }

  if (!paths.weights_path.empty()) {
    std::ofstream wf(paths.weights_path, std::ios::trunc);
    if (!wf.is_open()) {
      throw IoError("cannot open weight dump: " + paths.weights_path);
    }
    for (int i = 0; i < n_train; ++i) {
      const int64_t id = i < static_cast<int>(data.train_block_ids.size())
                             ? data.train_block_ids[static_cast<size_t>(i)]
                             : i;
      wf << "{\"id\": " << id
         << ", \"omega\": " << JsonNumber(w.weights[static_cast<size_t>(i)])
         << ", \"mode\": \"" << WeightModeName(w.mode) << "\"}\n";
    }
  }
  return result;
}

}  // namespace daptain
