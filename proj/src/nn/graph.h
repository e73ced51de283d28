// nn/graph.h

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

#ifndef DAPTAIN_NN_GRAPH_H_
#define DAPTAIN_NN_GRAPH_H_

#include <cmath>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nn/tensor.h"
#include "util/error.h"

namespace daptain {

// Reverse-mode tape.  Node ids are creation-ordered, so running the stored
// backward closures in reverse id order is a valid topological sweep.  Every
// op validates its output for non-finite values (a diagnostic error instead
// of silent NaN propagation), and reductions use a fixed summation order, so
// identical inputs give bit-identical results.
template <typename T>
class Graph {
 public:
  using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using RowVec = Eigen::Matrix<T, 1, Eigen::Dynamic>;

  Graph() = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  int Leaf(Tensor<T> value, bool needs_grad = false) {
    Node n;
    n.value = std::move(value);
    n.needs_grad = needs_grad;
    return Emit("leaf", std::move(n));
  }

  // Zero-copy leaf over caller-owned storage; if grad_sink is non-null the
  // accumulated gradient is added into it by Backward().  The pointed-to
  // tensors must outlive the graph.
  int ExternalLeaf(const Tensor<T>* value, Tensor<T>* grad_sink) {
    Node n;
    n.ext_value = value;
    n.grad_sink = grad_sink;
    n.needs_grad = grad_sink != nullptr;
    return Emit("leaf", std::move(n));
  }

  const Tensor<T>& value(int id) const {
    const Node& n = nodes_[static_cast<size_t>(id)];
    return n.ext_value != nullptr ? *n.ext_value : n.value;
  }

  // Gradient accumulated into a node; empty if nothing flowed there.
  const Tensor<T>& grad(int id) const {
    return nodes_[static_cast<size_t>(id)].grad;
  }

  T scalar(int id) const {
    const Tensor<T>& t = value(id);
    if (t.numel() != 1) throw ConfigError("graph: node is not a scalar");
    return t.v[0];
  }

  // y = x W + b for x [n, d_in], W [d_in, d_out], b [d_out].
  int Dense(int x, int w, int b) {
    const Tensor<T>& xv = value(x);
    const Tensor<T>& wv = value(w);
    const Tensor<T>& bv = value(b);
    if (xv.rank() != 2 || wv.rank() != 2 || bv.rank() != 1 ||
        xv.dim(1) != wv.dim(0) || wv.dim(1) != bv.dim(0)) {
      throw ConfigError("dense: shapes do not conform: x " +
                        ShapeString(xv.shape) + " W " + ShapeString(wv.shape) +
                        " b " + ShapeString(bv.shape));
    }
    const int n = xv.dim(0), dout = wv.dim(1);
    Tensor<T> y({n, dout});
    MulInto(Map2(y), CMap2(xv), false, CMap2(wv), false, false);
    Map2(y).rowwise() += Eigen::Map<const RowVec>(bv.v.data(), dout);

    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({x, w, b});
    const int out = Emit("dense", std::move(node));
    nodes_[static_cast<size_t>(out)].backward = [this, x, w, b, out, n,
                                                 dout]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty()) return;
      Eigen::Map<const Mat> gm(g.v.data(), n, dout);
      if (Wants(x)) {
        MulInto(Map2(GradRef(x)), gm, false, CMap2(value(w)), true, true);
      }
      if (Wants(w)) {
        MulInto(Map2(GradRef(w)), CMap2(value(x)), true, gm, false, true);
      }
      if (Wants(b)) {
        Tensor<T>& db = GradRef(b);
        for (int i = 0; i < n; ++i) {
          const T* row = g.v.data() + static_cast<int64_t>(i) * dout;
          for (int j = 0; j < dout; ++j) {
            db.v[static_cast<size_t>(j)] += row[j];
          }
        }
      }
    };
    return out;
  }

  // Cross-correlation with "same" zero padding: x [n, C_in, L], kernels
  // [C_out, C_in, K] with K odd, stride 1 or 2, output length ceil(L/stride).
  int Conv1d(int x, int k, int stride) {
    const Tensor<T>& xv = value(x);
    const Tensor<T>& kv = value(k);
    if (xv.rank() != 3 || kv.rank() != 3 || xv.dim(1) != kv.dim(1)) {
      throw ConfigError("conv1d: shapes do not conform: x " +
                        ShapeString(xv.shape) + " k " + ShapeString(kv.shape));
    }
    if (stride != 1 && stride != 2) {
      throw ConfigError("conv1d: stride must be 1 or 2");
    }
    const int kk = kv.dim(2);
    if (kk % 2 == 0) throw ConfigError("conv1d: kernel length must be odd");
    const int n = xv.dim(0), cin = xv.dim(1), len = xv.dim(2);
    const int cout = kv.dim(0);
    const int lp = (len + stride - 1) / stride;
    const int pad = (kk - 1) / 2;

    Tensor<T> y({n, cout, lp});
    {
      Eigen::Map<const Mat> kmat(kv.v.data(), cout, cin * kk);
      Mat& cols = ColScratch(cin * kk, lp);
      for (int s = 0; s < n; ++s) {
        Im2Col(xv, s, kk, stride, pad, &cols);
        MulInto(Eigen::Map<Mat>(y.v.data() + static_cast<int64_t>(s) * cout * lp,
                                cout, lp),
                kmat, false,
                Eigen::Map<const Mat>(cols.data(), cin * kk, lp), false, false);
      }
    }

    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({x, k});
    const int out = Emit("conv1d", std::move(node));
    nodes_[static_cast<size_t>(out)].backward = [this, x, k, out, stride, kk,
                                                 pad]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty()) return;
      const Tensor<T>& xv = value(x);
      const Tensor<T>& kv = value(k);
      const int n = xv.dim(0), cin = xv.dim(1), len = xv.dim(2);
      const int cout = kv.dim(0);
      const int lp = (len + stride - 1) / stride;
      Eigen::Map<const Mat> kmat(kv.v.data(), cout, cin * kk);
      const bool wants_x = Wants(x);
      const bool wants_k = Wants(k);
      Mat& cols = ColScratch(cin * kk, lp);
      Mat dcols;
      if (wants_x) dcols.resize(cin * kk, lp);
      for (int s = 0; s < n; ++s) {
        Eigen::Map<const Mat> gs(
            g.v.data() + static_cast<int64_t>(s) * cout * lp, cout, lp);
        if (wants_k) {
          Im2Col(xv, s, kk, stride, pad, &cols);
          MulInto(Eigen::Map<Mat>(GradRef(k).v.data(), cout, cin * kk),
                  gs, false,
                  Eigen::Map<const Mat>(cols.data(), cin * kk, lp), true, true);
        }
        if (wants_x) {
          MulInto(Eigen::Map<Mat>(dcols.data(), cin * kk, lp), kmat, true, gs,
                  false, false);
          Col2Im(dcols, s, kk, stride, pad, len, &GradRef(x));
        }
      }
    };
    return out;
  }

  // Adds a per-channel bias b [C] to x [n, C, L].
  int BiasChannel(int x, int b) {
    const Tensor<T>& xv = value(x);
    const Tensor<T>& bv = value(b);
    if (xv.rank() != 3 || bv.rank() != 1 || xv.dim(1) != bv.dim(0)) {
      throw ConfigError("bias_channel: shapes do not conform: x " +
                        ShapeString(xv.shape) + " b " + ShapeString(bv.shape));
    }
    const int n = xv.dim(0), c = xv.dim(1), len = xv.dim(2);
    Tensor<T> y({n, c, len});
    for (int s = 0; s < n; ++s) {
      for (int ch = 0; ch < c; ++ch) {
        const T add = bv.v[static_cast<size_t>(ch)];
        const int64_t base = (static_cast<int64_t>(s) * c + ch) * len;
        for (int t = 0; t < len; ++t) y.v[base + t] = xv.v[base + t] + add;
      }
    }
    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({x, b});
    const int out = Emit("bias_channel", std::move(node));
    nodes_[static_cast<size_t>(out)].backward = [this, x, b, out, n, c, len]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty()) return;
      if (Wants(x)) {
        Tensor<T>& dx = GradRef(x);
        for (size_t i = 0; i < g.v.size(); ++i) dx.v[i] += g.v[i];
      }
      if (Wants(b)) {
        Tensor<T>& db = GradRef(b);
        for (int ch = 0; ch < c; ++ch) {
          T acc{};
          for (int s = 0; s < n; ++s) {
            const T* gp = g.v.data() + (static_cast<int64_t>(s) * c + ch) * len;
            for (int t = 0; t < len; ++t) acc += gp[t];
          }
          db.v[static_cast<size_t>(ch)] += acc;
        }
      }
    };
    return out;
  }

  // x if x >= 0 else alpha x; the subgradient at 0 is 1.
  int LeakyRelu(int x, T alpha) {
    const Tensor<T>& xv = value(x);
    Tensor<T> y(xv.shape);
    for (size_t i = 0; i < xv.v.size(); ++i) {
      y.v[i] = xv.v[i] >= T{0} ? xv.v[i] : alpha * xv.v[i];
    }
    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({x});
    const int out = Emit("leaky_relu", std::move(node));
    nodes_[static_cast<size_t>(out)].backward = [this, x, out, alpha]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty() || !Wants(x)) return;
      const Tensor<T>& xv = value(x);
      Tensor<T>& dx = GradRef(x);
      for (size_t i = 0; i < g.v.size(); ++i) {
        dx.v[i] += xv.v[i] >= T{0} ? g.v[i] : alpha * g.v[i];
      }
    };
    return out;
  }

  // Numerically stable logistic sigmoid; saturates to exactly 0 and 1.
  int Sigmoid(int x) {
    const Tensor<T>& xv = value(x);
    Tensor<T> y(xv.shape);
    for (size_t i = 0; i < xv.v.size(); ++i) {
      const T v = xv.v[i];
      if (v >= T{0}) {
        y.v[i] = T{1} / (T{1} + std::exp(-v));
      } else {
        const T e = std::exp(v);
        y.v[i] = e / (T{1} + e);
      }
    }
    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({x});
    const int out = Emit("sigmoid", std::move(node));
    nodes_[static_cast<size_t>(out)].backward = [this, x, out]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty() || !Wants(x)) return;
      const Tensor<T>& yv = nodes_[static_cast<size_t>(out)].value;
      Tensor<T>& dx = GradRef(x);
      for (size_t i = 0; i < g.v.size(); ++i) {
        dx.v[i] += g.v[i] * yv.v[i] * (T{1} - yv.v[i]);
      }
    };
    return out;
  }

  // Identity forward; backward multiplies the incoming gradient by -beta.
  int GradReverse(int x, T beta) {
    Tensor<T> y = value(x);
    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({x});
    const int out = Emit("grad_reverse", std::move(node));
    nodes_[static_cast<size_t>(out)].backward = [this, x, out, beta]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty() || !Wants(x)) return;
      Tensor<T>& dx = GradRef(x);
      for (size_t i = 0; i < g.v.size(); ++i) dx.v[i] -= beta * g.v[i];
    };
    return out;
  }

  int Reshape(int x, std::vector<int> shape) {
    const Tensor<T>& xv = value(x);
    if (Tensor<T>::NumelOf(shape) != xv.numel()) {
      throw ConfigError("reshape: element count mismatch: " +
                        ShapeString(xv.shape) + " vs " + ShapeString(shape));
    }
    Tensor<T> y(std::move(shape), std::vector<T>(xv.v));
    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({x});
    const int out = Emit("reshape", std::move(node));
    nodes_[static_cast<size_t>(out)].backward = [this, x, out]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty() || !Wants(x)) return;
      Tensor<T>& dx = GradRef(x);
      for (size_t i = 0; i < g.v.size(); ++i) dx.v[i] += g.v[i];
    };
    return out;
  }

  // Nearest-neighbor upsampling by 2 along the last axis of [n, C, L].
  int Upsample2(int x) {
    const Tensor<T>& xv = value(x);
    if (xv.rank() != 3) throw ConfigError("upsample2: expects [n, C, L]");
    const int n = xv.dim(0), c = xv.dim(1), len = xv.dim(2);
    Tensor<T> y({n, c, 2 * len});
    for (int64_t row = 0; row < static_cast<int64_t>(n) * c; ++row) {
      const T* src = xv.v.data() + row * len;
      T* dst = y.v.data() + row * 2 * len;
      for (int t = 0; t < len; ++t) {
        dst[2 * t] = src[t];
        dst[2 * t + 1] = src[t];
      }
    }
    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({x});
    const int out = Emit("upsample2", std::move(node));
    nodes_[static_cast<size_t>(out)].backward = [this, x, out, n, c, len]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty() || !Wants(x)) return;
      Tensor<T>& dx = GradRef(x);
      for (int64_t row = 0; row < static_cast<int64_t>(n) * c; ++row) {
        const T* gs = g.v.data() + row * 2 * len;
        T* dst = dx.v.data() + row * len;
        for (int t = 0; t < len; ++t) dst[t] += gs[2 * t] + gs[2 * t + 1];
      }
    };
    return out;
  }

  // Keeps the centered out_len samples of the last axis of [n, C, L].
  int CropCenter(int x, int out_len) {
    const Tensor<T>& xv = value(x);
    if (xv.rank() != 3) throw ConfigError("crop_center: expects [n, C, L]");
    const int n = xv.dim(0), c = xv.dim(1), len = xv.dim(2);
    if (out_len <= 0 || out_len > len || (len - out_len) % 2 != 0) {
      throw ConfigError("crop_center: cannot center " +
                        std::to_string(out_len) + " in " + std::to_string(len));
    }
    const int off = (len - out_len) / 2;
    Tensor<T> y({n, c, out_len});
    for (int64_t row = 0; row < static_cast<int64_t>(n) * c; ++row) {
      const T* src = xv.v.data() + row * len + off;
      T* dst = y.v.data() + row * out_len;
      for (int t = 0; t < out_len; ++t) dst[t] = src[t];
    }
    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({x});
    const int out = Emit("crop_center", std::move(node));
    nodes_[static_cast<size_t>(out)].backward = [this, x, out, n, c, len,
                                                 out_len, off]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty() || !Wants(x)) return;
      Tensor<T>& dx = GradRef(x);
      for (int64_t row = 0; row < static_cast<int64_t>(n) * c; ++row) {
        const T* gs = g.v.data() + row * out_len;
        T* dst = dx.v.data() + row * len + off;
        for (int t = 0; t < out_len; ++t) dst[t] += gs[t];
      }
    };
    return out;
  }

  // Elementwise sum of two same-shape nodes.
  int Add(int a, int b) {
    const Tensor<T>& av = value(a);
    const Tensor<T>& bv = value(b);
    if (!av.SameShape(bv)) {
      throw ConfigError("add: shape mismatch: " + ShapeString(av.shape) +
                        " vs " + ShapeString(bv.shape));
    }
    Tensor<T> y(av.shape);
    for (size_t i = 0; i < y.v.size(); ++i) y.v[i] = av.v[i] + bv.v[i];
    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({a, b});
    const int out = Emit("add", std::move(node));
    nodes_[static_cast<size_t>(out)].backward = [this, a, b, out]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty()) return;
      for (int src : {a, b}) {
        if (!Wants(src)) continue;
        Tensor<T>& d = GradRef(src);
        for (size_t i = 0; i < g.v.size(); ++i) d.v[i] += g.v[i];
      }
    };
    return out;
  }

  int Scale(int x, T s) {
    const Tensor<T>& xv = value(x);
    Tensor<T> y(xv.shape);
    for (size_t i = 0; i < y.v.size(); ++i) y.v[i] = s * xv.v[i];
    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({x});
    const int out = Emit("scale", std::move(node));
    nodes_[static_cast<size_t>(out)].backward = [this, x, out, s]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty() || !Wants(x)) return;
      Tensor<T>& dx = GradRef(x);
      for (size_t i = 0; i < g.v.size(); ++i) dx.v[i] += s * g.v[i];
    };
    return out;
  }

  // -mean_i w_i [y_i log p_i + (1 - y_i) log(1 - p_i)], probabilities
  // clamped to [1e-7, 1 - 1e-7]; clamped samples get zero gradient.
  int BceLoss(int p, Tensor<T> labels, Tensor<T> weights) {
    const Tensor<T>& pv = value(p);
    if (pv.numel() != labels.numel() || pv.numel() != weights.numel()) {
      throw ConfigError("bce: predictions, labels, and weights must align");
    }
    for (T w : weights.v) {
      if (w < T{0}) throw ConfigError("bce: negative sample weight");
    }
    const T lo = static_cast<T>(1e-7);
    const T hi = T{1} - lo;
    const int64_t n = pv.numel();
    double acc = 0.0;
    for (int64_t i = 0; i < n; ++i) {
      const size_t ii = static_cast<size_t>(i);
      const T pc = pv.v[ii] < lo ? lo : (pv.v[ii] > hi ? hi : pv.v[ii]);
      acc -= static_cast<double>(weights.v[ii]) *
             (static_cast<double>(labels.v[ii]) *
                  std::log(static_cast<double>(pc)) +
              (1.0 - static_cast<double>(labels.v[ii])) *
                  std::log(1.0 - static_cast<double>(pc)));
    }
    Tensor<T> y({1});
    y.v[0] = static_cast<T>(acc / static_cast<double>(n));

    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({p});
    const int out = Emit("bce", std::move(node));
    nodes_[static_cast<size_t>(out)].backward =
        [this, p, out, labels = std::move(labels),
         weights = std::move(weights), lo, hi, n]() {
          const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
          if (g.v.empty() || !Wants(p)) return;
          const T gs = g.v[0] / static_cast<T>(n);
          const Tensor<T>& pv = value(p);
          Tensor<T>& dp = GradRef(p);
          for (int64_t i = 0; i < n; ++i) {
            const size_t ii = static_cast<size_t>(i);
            const T pc = pv.v[ii];
            if (pc < lo || pc > hi) continue;
            dp.v[ii] -= gs * weights.v[ii] *
                        (labels.v[ii] / pc -
                         (T{1} - labels.v[ii]) / (T{1} - pc));
          }
        };
    return out;
  }

  // mean_i w_i MSE_i where MSE_i averages over one sample's elements;
  // pred and target are [n, ...], weights has n entries.
  int WeightedMse(int pred, Tensor<T> target, Tensor<T> weights) {
    const Tensor<T>& pv = value(pred);
    if (!pv.SameShape(target)) {
      throw ConfigError("weighted_mse: prediction/target shape mismatch");
    }
    const int n = pv.dim(0);
    if (weights.numel() != n) {
      throw ConfigError("weighted_mse: one weight per sample required");
    }
    const int64_t m = pv.numel() / n;
    double acc = 0.0;
    for (int s = 0; s < n; ++s) {
      double se = 0.0;
      const T* pp = pv.v.data() + static_cast<int64_t>(s) * m;
      const T* tt = target.v.data() + static_cast<int64_t>(s) * m;
      for (int64_t j = 0; j < m; ++j) {
        const double diff =
            static_cast<double>(pp[j]) - static_cast<double>(tt[j]);
        se += diff * diff;
      }
      acc += static_cast<double>(weights.v[static_cast<size_t>(s)]) * se /
             static_cast<double>(m);
    }
    Tensor<T> y({1});
    y.v[0] = static_cast<T>(acc / n);

    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({pred});
    const int out = Emit("weighted_mse", std::move(node));
    nodes_[static_cast<size_t>(out)].backward =
        [this, pred, out, target = std::move(target),
         weights = std::move(weights), n, m]() {
          const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
          if (g.v.empty() || !Wants(pred)) return;
          const Tensor<T>& pv = value(pred);
          Tensor<T>& dp = GradRef(pred);
          const T gs = g.v[0] / (static_cast<T>(n) * static_cast<T>(m));
          for (int s = 0; s < n; ++s) {
            const T ws = T{2} * weights.v[static_cast<size_t>(s)] * gs;
            const T* pp = pv.v.data() + static_cast<int64_t>(s) * m;
            const T* tt = target.v.data() + static_cast<int64_t>(s) * m;
            T* dd = dp.v.data() + static_cast<int64_t>(s) * m;
            for (int64_t j = 0; j < m; ++j) dd[j] += ws * (pp[j] - tt[j]);
          }
        };
    return out;
  }

  // |sum_d var_d(z) - target| over z [n, d] with population variances;
  // the subgradient at the kink is 0.
  int SumVarGap(int z, T target) {
    const Tensor<T>& zv = value(z);
    if (zv.rank() != 2) throw ConfigError("sumvar_gap: expects [n, d]");
    const int n = zv.dim(0), d = zv.dim(1);
    const double svar = SumVarOf(zv);
    const double gap = svar - static_cast<double>(target);
    Tensor<T> y({1});
    y.v[0] = static_cast<T>(std::abs(gap));

    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({z});
    const int out = Emit("sumvar_gap", std::move(node));
    const T sign = gap > 0.0 ? T{1} : (gap < 0.0 ? T{-1} : T{0});
    nodes_[static_cast<size_t>(out)].backward = [this, z, out, n, d, sign]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty() || !Wants(z) || sign == T{0}) return;
      const Tensor<T>& zv = value(z);
      Tensor<T>& dz = GradRef(z);
      const T gs = g.v[0] * sign * T{2} / static_cast<T>(n);
      for (int col = 0; col < d; ++col) {
        double mean = 0.0;
        for (int row = 0; row < n; ++row) {
          mean += static_cast<double>(
              zv.v[static_cast<size_t>(row) * d + static_cast<size_t>(col)]);
        }
        mean /= n;
        for (int row = 0; row < n; ++row) {
          const size_t idx =
              static_cast<size_t>(row) * d + static_cast<size_t>(col);
          dz.v[idx] += gs * (zv.v[idx] - static_cast<T>(mean));
        }
      }
    };
    return out;
  }

  // Recenters and rescales z [n, d] so the summed per-dimension variance
  // equals target: y = m + (z - m) sqrt(target / sumvar).  The scale is a
  // constant in backward (no gradient through sumvar).
  int NormalizeLatent(int z, T target) {
    const Tensor<T>& zv = value(z);
    if (zv.rank() != 2) throw ConfigError("normalize_latent: expects [n, d]");
    const int n = zv.dim(0), d = zv.dim(1);
    if (n < 2) throw ConfigError("normalize_latent: batch must have >= 2 rows");
    if (target <= T{0}) {
      throw ConfigError("normalize_latent: target variance must be positive");
    }
    const double svar = SumVarOf(zv);
    if (svar <= 1e-30) {
      throw DegenerateInputError(
          "normalize_latent: latent batch variance vanished");
    }
    const T s = static_cast<T>(std::sqrt(static_cast<double>(target) / svar));
    std::vector<T> means(static_cast<size_t>(d));
    for (int col = 0; col < d; ++col) {
      double m = 0.0;
      for (int row = 0; row < n; ++row) {
        m += static_cast<double>(
            zv.v[static_cast<size_t>(row) * d + static_cast<size_t>(col)]);
      }
      means[static_cast<size_t>(col)] = static_cast<T>(m / n);
    }
    Tensor<T> y({n, d});
    for (int row = 0; row < n; ++row) {
      for (int col = 0; col < d; ++col) {
        const size_t idx =
            static_cast<size_t>(row) * d + static_cast<size_t>(col);
        y.v[idx] = means[static_cast<size_t>(col)] +
                   (zv.v[idx] - means[static_cast<size_t>(col)]) * s;
      }
    }
    Node node;
    node.value = std::move(y);
    node.needs_grad = NeedsGrad({z});
    const int out = Emit("normalize_latent", std::move(node));
    nodes_[static_cast<size_t>(out)].backward = [this, z, out, n, d, s]() {
      const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
      if (g.v.empty() || !Wants(z)) return;
      Tensor<T>& dz = GradRef(z);
      for (int col = 0; col < d; ++col) {
        double gm = 0.0;
        for (int row = 0; row < n; ++row) {
          gm += static_cast<double>(
              g.v[static_cast<size_t>(row) * d + static_cast<size_t>(col)]);
        }
        const T pass = static_cast<T>(gm / n) * (T{1} - s);
        for (int row = 0; row < n; ++row) {
          const size_t idx =
              static_cast<size_t>(row) * d + static_cast<size_t>(col);
          dz.v[idx] += s * g.v[idx] + pass;
        }
      }
    };
    return out;
  }

  // coefficient * sum of squared values over the listed nodes.
  int L2Penalty(std::vector<int> params, T coefficient) {
    if (coefficient < T{0}) {
      throw ConfigError("l2_penalty: negative coefficient");
    }
    double acc = 0.0;
    bool needs = false;
    for (int id : params) {
      for (T w : value(id).v) {
        acc += static_cast<double>(w) * static_cast<double>(w);
      }
      needs = needs || Wants(id);
    }
    Tensor<T> y({1});
    y.v[0] = static_cast<T>(static_cast<double>(coefficient) * acc);

    Node node;
    node.value = std::move(y);
    node.needs_grad = needs;
    const int out = Emit("l2_penalty", std::move(node));
    nodes_[static_cast<size_t>(out)].backward =
        [this, out, params = std::move(params), coefficient]() {
          const Tensor<T>& g = nodes_[static_cast<size_t>(out)].grad;
          if (g.v.empty()) return;
          const T gs = g.v[0] * T{2} * coefficient;
          for (int id : params) {
            if (!Wants(id)) continue;
            const Tensor<T>& wv = value(id);
            Tensor<T>& dw = GradRef(id);
            for (size_t i = 0; i < wv.v.size(); ++i) dw.v[i] += gs * wv.v[i];
          }
        };
    return out;
  }

  // Seeds the loss gradient with 1, sweeps the tape backwards, then flushes
  // external gradient sinks (with a finite check on each).
  void Backward(int loss) {
    const Tensor<T>& lv = value(loss);
    if (lv.numel() != 1) throw ConfigError("backward: loss must be a scalar");
    GradRef(loss).v[0] = T{1};
    for (int i = loss; i >= 0; --i) {
      Node& n = nodes_[static_cast<size_t>(i)];
      if (n.backward) n.backward();
    }
    for (Node& n : nodes_) {
      if (n.grad_sink == nullptr || n.grad.v.empty()) continue;
      if (!n.grad_sink->SameShape(n.grad)) {
        throw ConfigError("backward: gradient sink shape mismatch");
      }
      double acc = 0.0;
      for (size_t i = 0; i < n.grad.v.size(); ++i) {
        n.grad_sink->v[i] += n.grad.v[i];
        acc += static_cast<double>(n.grad.v[i]);
      }
      if (!std::isfinite(acc)) {
        throw TrainingError("backward: non-finite parameter gradient");
      }
    }
  }

 private:
  struct Node {
    Tensor<T> value;
    const Tensor<T>* ext_value = nullptr;
    Tensor<T> grad;
    Tensor<T>* grad_sink = nullptr;
    bool needs_grad = false;
    std::function<void()> backward;
  };

  int Emit(const char* op, Node node) {
    const Tensor<T>& v =
        node.ext_value != nullptr ? *node.ext_value : node.value;
    double acc = 0.0;
    for (T x : v.v) acc += static_cast<double>(x);
    if (!std::isfinite(acc)) {
      throw TrainingError(std::string(op) + ": produced non-finite values");
    }
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  bool Wants(int id) const {
    return nodes_[static_cast<size_t>(id)].needs_grad;
  }

  bool NeedsGrad(std::initializer_list<int> ids) const {
    for (int id : ids) {
      if (Wants(id)) return true;
    }
    return false;
  }

  Tensor<T>& GradRef(int id) {
    Node& n = nodes_[static_cast<size_t>(id)];
    if (n.grad.v.empty()) n.grad = Tensor<T>(value(id).shape);
    return n.grad;
  }

  static Eigen::Map<const Mat> CMap2(const Tensor<T>& t) {
    return {t.v.data(), t.dim(0), t.dim(1)};
  }
  static Eigen::Map<Mat> Map2(Tensor<T>& t) {
    return {t.v.data(), t.dim(0), t.dim(1)};
  }

  // c = (or +=) op(a) * op(b).  Eigen's matrix-vector kernels peel their
  // reductions from the runtime buffer address, so repeated training runs in
  // one process diverge in the last bits; any product with a unit extent runs
  // here in fixed order instead.  Full matrix products pack into aligned
  // internal buffers and keep Eigen's speed.
  static void MulInto(Eigen::Map<Mat> c, Eigen::Map<const Mat> a, bool ta,
                      Eigen::Map<const Mat> b, bool tb, bool accumulate) {
    const Eigen::Index m = ta ? a.cols() : a.rows();
    const Eigen::Index inner = ta ? a.rows() : a.cols();
    const Eigen::Index n = tb ? b.rows() : b.cols();
    if (m > 1 && inner > 1 && n > 1) {
      if (accumulate) {
        if (ta && tb) {
          c.noalias() += a.transpose() * b.transpose();
        } else if (ta) {
          c.noalias() += a.transpose() * b;
        } else if (tb) {
          c.noalias() += a * b.transpose();
        } else {
          c.noalias() += a * b;
        }
      } else {
        if (ta && tb) {
          c.noalias() = a.transpose() * b.transpose();
        } else if (ta) {
          c.noalias() = a.transpose() * b;
        } else if (tb) {
          c.noalias() = a * b.transpose();
        } else {
          c.noalias() = a * b;
        }
      }
      return;
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        T acc{};
        for (Eigen::Index p = 0; p < inner; ++p) {
          acc += (ta ? a(p, i) : a(i, p)) * (tb ? b(j, p) : b(p, j));
        }
        if (accumulate) {
          c(i, j) += acc;
        } else {
          c(i, j) = acc;
        }
      }
    }
  }

  static double SumVarOf(const Tensor<T>& z) {
    const int n = z.dim(0), d = z.dim(1);
    double svar = 0.0;
    for (int col = 0; col < d; ++col) {
      double mean = 0.0;
      for (int row = 0; row < n; ++row) {
        mean += static_cast<double>(
            z.v[static_cast<size_t>(row) * d + static_cast<size_t>(col)]);
      }
      mean /= n;
      double var = 0.0;
      for (int row = 0; row < n; ++row) {
        const double c =
            static_cast<double>(
                z.v[static_cast<size_t>(row) * d + static_cast<size_t>(col)]) -
            mean;
        var += c * c;
      }
      svar += var / n;
    }
    return svar;
  }

  void Im2Col(const Tensor<T>& x, int s, int kk, int stride, int pad,
              Mat* cols) const {
    const int cin = x.dim(1), len = x.dim(2);
    const int lp = static_cast<int>(cols->cols());
    T* base = cols->data();
    for (int c = 0; c < cin; ++c) {
      const T* xc = x.v.data() + (static_cast<int64_t>(s) * cin + c) * len;
      for (int t = 0; t < kk; ++t) {
        T* row = base + static_cast<int64_t>(c * kk + t) * lp;
        for (int l = 0; l < lp; ++l) {
          const int src = l * stride + t - pad;
          row[l] = (src >= 0 && src < len) ? xc[src] : T{0};
        }
      }
    }
  }

  void Col2Im(const Mat& dcols, int s, int kk, int stride, int pad, int len,
              Tensor<T>* dx) const {
    const int cin = dx->dim(1);
    const int lp = static_cast<int>(dcols.cols());
    const T* base = dcols.data();
    for (int c = 0; c < cin; ++c) {
      T* dxc = dx->v.data() + (static_cast<int64_t>(s) * cin + c) * len;
      for (int t = 0; t < kk; ++t) {
        const T* row = base + static_cast<int64_t>(c * kk + t) * lp;
        for (int l = 0; l < lp; ++l) {
          const int src = l * stride + t - pad;
          if (src >= 0 && src < len) dxc[src] += row[l];
        }
      }
    }
  }

  Mat& ColScratch(int rows, int cols) {
    if (col_scratch_.rows() != rows || col_scratch_.cols() != cols) {
      col_scratch_.resize(rows, cols);
    }
    return col_scratch_;
  }

  std::vector<Node> nodes_;
  Mat col_scratch_;
};

}  // namespace daptain

#endif  // DAPTAIN_NN_GRAPH_H_
