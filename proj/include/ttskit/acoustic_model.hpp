// ttskit/acoustic_model.hpp
//
// Tied-state mean-trajectory acoustic model. Generation repeats each leaf
// mean for the phone's predicted duration; an optional linear cross-fade
// softens boundaries without changing the frame count.

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

#ifndef TTSKIT_ACOUSTIC_MODEL_HPP_
#define TTSKIT_ACOUSTIC_MODEL_HPP_

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "ttskit/cluster_tree.hpp"
#include "ttskit/common.hpp"
#include "ttskit/context_stats.hpp"
#include "ttskit/labels.hpp"

namespace ttskit {

struct PhoneSpan {
  std::size_t begin = 0;  // first frame
  std::size_t end = 0;    // one past last frame
};

// T x d float32 frames plus per-phone spans. Spans are contiguous,
// non-overlapping and cover [0, T).
struct FeatureTrajectory {
  std::size_t dim = 0;
  double frame_period_ms = 5.0;
  std::vector<float> frames;  // row-major, frame_count() x dim
  std::vector<PhoneSpan> spans;

  std::size_t frame_count() const { return dim == 0 ? 0 : frames.size() / dim; }

  float at(std::size_t t, std::size_t k) const { return frames[t * dim + k]; }
};

class AcousticModel {
 public:
  AcousticModel() = default;
  AcousticModel(ClusterTree tree, double frame_period_ms = 5.0)
      : tree_(std::move(tree)), frame_period_ms_(frame_period_ms) {}

  const ClusterTree& tree() const { return tree_; }
  std::size_t dim() const { return tree_.dim(); }
  double frame_period_ms() const { return frame_period_ms_; }

  const std::vector<double>& leaf_mean(const FullContextLabel& label) const {
    return tree_.leaf_at(tree_.route(label)).mean;
  }

  // smooth_window = frames blended on each side of a phone boundary;
  // 0 reproduces the piecewise-constant output exactly.
  FeatureTrajectory generate(const std::vector<FullContextLabel>& labels,
                             const std::vector<int>& durations,
                             std::size_t smooth_window = 0) const {
    if (labels.size() != durations.size())
      throw DataError("acoustic: " + std::to_string(labels.size()) +
                      " labels vs " + std::to_string(durations.size()) +
                      " durations");
    FeatureTrajectory traj;
    traj.dim = dim();
    traj.frame_period_ms = frame_period_ms_;
    std::size_t total = 0;
    std::vector<const std::vector<double>*> means;
    means.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (durations[i] < 1)
        throw DataError("acoustic: non-positive duration at phone " +
                        std::to_string(i));
      PhoneSpan span{total, total + static_cast<std::size_t>(durations[i])};
      traj.spans.push_back(span);
      total = span.end;
      means.push_back(&leaf_mean(labels[i]));
    }
    traj.frames.assign(total * traj.dim, 0.0f);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t t = traj.spans[i].begin; t < traj.spans[i].end; ++t)
        for (std::size_t k = 0; k < traj.dim; ++k)
          traj.frames[t * traj.dim + k] =
              static_cast<float>((*means[i])[k]);
    }
    if (smooth_window > 0 && labels.size() > 1) {
      // At each boundary blend at most floor(dur/2) frames per side so
      // neighbouring blend regions cannot overlap.
      for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
        std::size_t b = traj.spans[i + 1].begin;
        std::size_t dur_l = traj.spans[i].end - traj.spans[i].begin;
        std::size_t dur_r = traj.spans[i + 1].end - traj.spans[i + 1].begin;
        std::size_t ext_l = std::min(smooth_window, dur_l / 2);
        std::size_t ext_r = std::min(smooth_window, dur_r / 2);
        std::size_t width = ext_l + ext_r;
        if (width == 0) continue;
        for (std::size_t t = b - ext_l; t < b + ext_r; ++t) {
          double alpha =
              (static_cast<double>(t) - (static_cast<double>(b) - ext_l) +
               0.5) /
              static_cast<double>(width);
          for (std::size_t k = 0; k < traj.dim; ++k) {
            double v = (1.0 - alpha) * (*means[i])[k] +
                       alpha * (*means[i + 1])[k];
            traj.frames[t * traj.dim + k] = static_cast<float>(v);
          }
        }
      }
    }
    return traj;
  }

 private:
  ClusterTree tree_;
  double frame_period_ms_ = 5.0;
};

inline AcousticModel train_acoustic_model(const StatsMap& acoustic_stats,
                                          ClusterTree tree,
                                          double frame_period_ms = 5.0) {
  repool_leaves(&tree, acoustic_stats);
  return AcousticModel(std::move(tree), frame_period_ms);
}

// ---------------------------------------------------------------------------
// Trajectory files: raw little-endian float32 frames, with a one-line text
// sidecar `<frames> <dim> <frame_period_ms>` at <path>.meta. An optional
// delimited text dump aids debugging.
// ---------------------------------------------------------------------------

inline std::filesystem::path trajectory_sidecar_path(
    const std::filesystem::path& feature_path) {
  std::filesystem::path p = feature_path;
  p += ".meta";
  return p;
}

inline void write_trajectory(const FeatureTrajectory& traj,
                             const std::filesystem::path& path) {
  static_assert(sizeof(float) == 4);
  std::string bytes(reinterpret_cast<const char*>(traj.frames.data()),
                    traj.frames.size() * sizeof(float));
  write_file_atomic(path, bytes);
  std::string sidecar = std::to_string(traj.frame_count()) + " " +
                        std::to_string(traj.dim) + " " +
                        format_double(traj.frame_period_ms) + "\n";
  write_file_atomic(trajectory_sidecar_path(path), sidecar);
}

struct TrajectorySidecar {
  std::size_t frame_count = 0;
  std::size_t dim = 0;
  double frame_period_ms = 0.0;
};

inline TrajectorySidecar read_trajectory_sidecar(
    const std::filesystem::path& feature_path) {
  std::filesystem::path side = trajectory_sidecar_path(feature_path);
  std::vector<std::string> lines = read_lines(side);
  if (lines.empty())
    throw ParseError(side.string(), 1, 0, "empty sidecar");
  std::vector<std::string> f = split_whitespace(lines[0]);
  if (f.size() != 3)
    throw ParseError(side.string(), 1, 0,
                     "expected '<frames> <dim> <frame_period_ms>'");
  TrajectorySidecar sc;
  sc.frame_count =
      static_cast<std::size_t>(parse_long(f[0], side.string(), 1));
  sc.dim = static_cast<std::size_t>(parse_long(f[1], side.string(), 1));
  sc.frame_period_ms = parse_double(f[2], side.string(), 1);
  return sc;
}

inline FeatureTrajectory read_trajectory(const std::filesystem::path& path) {
  TrajectorySidecar sc = read_trajectory_sidecar(path);
  std::string bytes = read_file_text(path);
  if (bytes.size() != sc.frame_count * sc.dim * sizeof(float))
    throw DataError(path.string() + ": binary size " +
                    std::to_string(bytes.size()) +
                    " does not match sidecar (" +
                    std::to_string(sc.frame_count * sc.dim * sizeof(float)) +
                    " bytes expected)");
  FeatureTrajectory traj;
  traj.dim = sc.dim;
  traj.frame_period_ms = sc.frame_period_ms;
  traj.frames.resize(sc.frame_count * sc.dim);
  std::memcpy(traj.frames.data(), bytes.data(), bytes.size());
  return traj;
}

inline std::string render_trajectory_text(const FeatureTrajectory& traj) {
  std::string out;
  for (std::size_t t = 0; t < traj.frame_count(); ++t) {
    for (std::size_t k = 0; k < traj.dim; ++k) {
      if (k) out += '\t';
      out += format_double(traj.at(t, k));
    }
    out += '\n';
  }
  return out;
}

}  // namespace ttskit

#endif  // TTSKIT_ACOUSTIC_MODEL_HPP_
