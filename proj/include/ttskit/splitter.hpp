// ttskit/splitter.hpp
//
// Splits sentences at interior bigrams whose log-likelihood falls strictly
// below a threshold, so poorly connected word pairs end up in separate
// synthesis segments.

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

#ifndef TTSKIT_SPLITTER_HPP_
#define TTSKIT_SPLITTER_HPP_

#include <map>
#include <string>
#include <vector>

#include "ttskit/common.hpp"
#include "ttskit/ngram_model.hpp"

namespace ttskit {

inline constexpr double kDefaultSplitThreshold = -5.12;

struct SplitPoint {
  std::size_t index;    // 0-based token after which the split occurred
  ScoredBigram bigram;  // the offending pair, bigram.left == tokens[index]
};

struct SplitResult {
  std::vector<std::vector<std::string>> segments;
  std::vector<SplitPoint> split_points;
  double threshold = kDefaultSplitThreshold;

  std::vector<std::string> flattened() const {
    std::vector<std::string> out;
    for (const auto& seg : segments) out.insert(out.end(), seg.begin(), seg.end());
    return out;
  }
};

// Marker-adjacent bigrams never split; ties at the threshold do not split.
inline SplitResult split(const NgramModel& model,
                         const std::vector<std::string>& tokens,
                         double threshold = kDefaultSplitThreshold) {
  SplitResult result;
  result.threshold = threshold;
  if (tokens.empty()) return result;
  std::vector<ScoredBigram> scores = model.score_bigrams(tokens);
  // scores[i] for i in [1, N-1] covers (tokens[i-1], tokens[i]).
  std::vector<std::string> current;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    current.push_back(tokens[i]);
    bool cut = false;
    if (i + 1 < tokens.size()) {
      const ScoredBigram& sb = scores[i + 1];
      if (sb.log_likelihood < threshold) {
        result.split_points.push_back({i, sb});
        cut = true;
      }
    }
    if (cut) {
      result.segments.push_back(std::move(current));
      current.clear();
    }
  }
  result.segments.push_back(std::move(current));
  return result;
}

struct SynthesisPlan {
  std::vector<std::vector<std::string>> segment_tokens;
  std::vector<std::string> segment_texts;
  std::size_t pause_frames = 0;  // silence inserted at each join

  std::size_t join_count() const {
    return segment_texts.empty() ? 0 : segment_texts.size() - 1;
  }
};

inline SynthesisPlan plan_synthesis(const SplitResult& result,
                                    std::size_t pause_frames = 0) {
  SynthesisPlan plan;
  plan.pause_frames = pause_frames;
  for (const auto& seg : result.segments) {
    plan.segment_tokens.push_back(seg);
    plan.segment_texts.push_back(join(seg, " "));
  }
  return plan;
}

// Threshold selection helper: segment-length histograms across a sweep.
struct ThresholdSweepEntry {
  double threshold = 0.0;
  std::size_t split_count = 0;
  std::size_t segment_count = 0;
  std::map<std::size_t, std::size_t> segment_length_histogram;
};

inline std::vector<ThresholdSweepEntry> sweep_thresholds(
    const NgramModel& model,
    const std::vector<std::vector<std::string>>& sentences,
    const std::vector<double>& thresholds) {
  std::vector<ThresholdSweepEntry> out;
  for (double t : thresholds) {
    ThresholdSweepEntry entry;
    entry.threshold = t;
    for (const auto& tokens : sentences) {
      SplitResult r = split(model, tokens, t);
      entry.split_count += r.split_points.size();
      entry.segment_count += r.segments.size();
      for (const auto& seg : r.segments)
        ++entry.segment_length_histogram[seg.size()];
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace ttskit

#endif  // TTSKIT_SPLITTER_HPP_
