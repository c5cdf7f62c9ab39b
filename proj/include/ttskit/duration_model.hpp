// ttskit/duration_model.hpp
//
// Explicit phone duration model: one Gaussian (mean/std in frames) per tied
// state, predicting frames = max(1, round(mu + rho*sigma)). Every phone
// occupies at least one frame, so skips and repeats cannot arise from
// duration prediction.

// Copyright 2026  ttskit authors

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

#ifndef TTSKIT_DURATION_MODEL_HPP_
#define TTSKIT_DURATION_MODEL_HPP_

#include <cmath>
#include <vector>

#include "ttskit/cluster_tree.hpp"
#include "ttskit/common.hpp"
#include "ttskit/context_stats.hpp"
#include "ttskit/labels.hpp"

namespace ttskit {

class DurationModel {
 public:
  DurationModel() = default;
  explicit DurationModel(ClusterTree tree, double rho = 0.0)
      : tree_(std::move(tree)), rho_(rho) {
    if (tree_.dim() != 1)
      throw DataError("duration model: tree must carry 1-dimensional stats");
  }

  const ClusterTree& tree() const { return tree_; }
  double rho() const { return rho_; }
  void set_rho(double rho) { rho_ = rho; }

  // mu and sigma of the tied state a label routes to; sigma is the population
  // std of pooled occurrence durations (0 for single-occurrence leaves).
  std::pair<double, double> leaf_params(const FullContextLabel& label) const {
    const TreeLeaf& leaf = tree_.leaf_at(tree_.route(label));
    return {leaf.mean[0], std::sqrt(leaf.variance[0])};
  }

  int predict_one(const FullContextLabel& label) const {
    auto [mu, sigma] = leaf_params(label);
    long frames = std::lround(mu + rho_ * sigma);
    return static_cast<int>(std::max(1L, frames));
  }

  std::vector<int> predict(const std::vector<FullContextLabel>& labels) const {
    std::vector<int> out;
    out.reserve(labels.size());
    for (const auto& label : labels) out.push_back(predict_one(label));
    return out;
  }

 private:
  ClusterTree tree_;
  double rho_ = 0.0;
};

// Attaches leaf Gaussians pooled from raw duration stats (occurrence counts
// and duration moments) to a tree grown over the same stream.
inline DurationModel train_duration_model(const StatsMap& duration_stats,
                                          ClusterTree tree, double rho = 0.0) {
  repool_leaves(&tree, duration_stats);
  return DurationModel(std::move(tree), rho);
}

}  // namespace ttskit

#endif  // TTSKIT_DURATION_MODEL_HPP_
