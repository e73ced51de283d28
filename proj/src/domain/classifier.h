// domain/classifier.h

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

#ifndef DAPTAIN_DOMAIN_CLASSIFIER_H_
#define DAPTAIN_DOMAIN_CLASSIFIER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nn/graph.h"
#include "nn/params.h"
#include "nn/tensor.h"

namespace daptain {

struct ClassifierConfig {
  int input_dim = 41;
  int hidden1 = 64;
  int hidden2 = 32;
};

// Domain discriminator: a two-layer leaky-relu embedding followed by a
// sigmoid head.  The embedding can be copied between classifiers so a later
// classifier can refine features learned by an earlier one.
class DomainClassifier {
 public:
  DomainClassifier(const ClassifierConfig& cfg, uint64_t seed,
                   std::string role);

  // Probability that each row is a source sample.
  std::vector<double> Predict(const Tensor<float>& x) const;

  // Builds the forward pass with gradient sinks into this classifier's
  // parameters.  When adversarial is set, a gradient-reversal stage between
  // the embedding and the head trains the embedding to confuse the head.
  int BuildProb(Graph<float>* g, int x, bool adversarial, float beta);

  void CopyEmbeddingFrom(const DomainClassifier& other);

  ParamStore<float>& params() { return ps_; }
  const ParamStore<float>& params() const { return ps_; }
  const ClassifierConfig& config() const { return cfg_; }
  const std::string& role() const { return role_; }

  // Trainable scalar count of the head; serves as the capacity surrogate in
  // the generalization bound.
  int64_t HeadParamCount() const;

 private:
  int BuildProbInternal(Graph<float>* g, int x, bool adversarial, float beta,
                        bool with_grads) const;

  ClassifierConfig cfg_;
  std::string role_;
  ParamStore<float> ps_;
};

}  // namespace daptain

#endif  // DAPTAIN_DOMAIN_CLASSIFIER_H_
