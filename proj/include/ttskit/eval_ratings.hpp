// ttskit/eval_ratings.hpp
//
// Listening-test score aggregation: MOS, intelligibility, comprehension
// percentage, and DMOS normalized against ground-truth ratings.

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

#ifndef TTSKIT_EVAL_RATINGS_HPP_
#define TTSKIT_EVAL_RATINGS_HPP_

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttskit/common.hpp"

namespace ttskit {

inline constexpr double kRatingScaleMin = 1.0;
inline constexpr double kRatingScaleMax = 5.0;

struct Rating {
  std::string listener;
  std::string item;
  std::string system;
  double quality = 0.0;          // 1-5
  double intelligibility = 0.0;  // 1-5
  std::optional<bool> comprehension_correct;
};

struct RatingSet {
  std::string system;
  std::vector<Rating> ratings;
};

// Delimited text, one rating per line:
//   listener item system quality intelligibility comprehension(0|1|-)
inline std::vector<Rating> parse_ratings_file(
    const std::filesystem::path& path) {
  std::vector<Rating> out;
  std::size_t lineno = 0;
  const std::string where = path.string();
  for (const std::string& raw : read_lines(path)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> f = split_whitespace(line);
    if (f.size() != 6)
      throw ParseError(where, lineno, 0,
                       "expected 6 fields: listener item system quality "
                       "intelligibility comprehension");
    Rating r;
    r.listener = f[0];
    r.item = f[1];
    r.system = f[2];
    r.quality = parse_double(f[3], where, lineno);
    r.intelligibility = parse_double(f[4], where, lineno);
    if (f[5] != "-") {
      long v = parse_long(f[5], where, lineno);
      if (v != 0 && v != 1)
        throw ParseError(where, lineno, 0,
                         "comprehension flag must be 0, 1 or '-'");
      r.comprehension_correct = (v == 1);
    }
    for (double score : {r.quality, r.intelligibility}) {
      if (score < kRatingScaleMin || score > kRatingScaleMax)
        throw ParseError(where, lineno, 0,
                         "score outside the 1-5 scale: " +
                         format_double(score));
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline RatingSet filter_system(const std::vector<Rating>& ratings,
                               const std::string& system) {
  RatingSet set;
  set.system = system;
  for (const Rating& r : ratings)
    if (r.system == system) set.ratings.push_back(r);
  return set;
}

struct ScoreSummary {
  double mos = 0.0;
  double intelligibility = 0.0;
  std::optional<double> comprehension_pct;  // [0, 100]
  std::optional<double> dmos;
};

inline ScoreSummary summarize_ratings(const RatingSet& set) {
  if (set.ratings.empty())
    throw DataError("eval mos: no ratings for system '" + set.system + "'");
  ScoreSummary s;
  std::size_t comp_total = 0, comp_correct = 0;
  for (const Rating& r : set.ratings) {
    s.mos += r.quality;
    s.intelligibility += r.intelligibility;
    if (r.comprehension_correct) {
      ++comp_total;
      if (*r.comprehension_correct) ++comp_correct;
    }
  }
  s.mos /= static_cast<double>(set.ratings.size());
  s.intelligibility /= static_cast<double>(set.ratings.size());
  if (comp_total > 0)
    s.comprehension_pct = 100.0 * static_cast<double>(comp_correct) /
                          static_cast<double>(comp_total);
  return s;
}

// DMOS: per (listener, item) pair rated for both the system and the ground
// truth, the quality ratio is averaged, rescaled to the 1-5 range and
// clamped.
inline double degradation_mos(const RatingSet& system_set,
                              const RatingSet& ground_truth_set) {
  std::map<std::pair<std::string, std::string>, double> gt;
  for (const Rating& r : ground_truth_set.ratings)
    gt[{r.listener, r.item}] = r.quality;
  double ratio_sum = 0.0;
  std::size_t pairs = 0;
  for (const Rating& r : system_set.ratings) {
    auto it = gt.find({r.listener, r.item});
    if (it == gt.end()) continue;
    ratio_sum += r.quality / it->second;
    ++pairs;
  }
  if (pairs == 0)
    throw DataError("eval mos: no (listener,item) overlap with ground truth");
  double dmos = kRatingScaleMax * ratio_sum / static_cast<double>(pairs);
  return std::clamp(dmos, kRatingScaleMin, kRatingScaleMax);
}

inline ScoreSummary summarize_with_dmos(const RatingSet& system_set,
                                        const RatingSet& ground_truth_set) {
  ScoreSummary s = summarize_ratings(system_set);
  s.dmos = degradation_mos(system_set, ground_truth_set);
  return s;
}

// Table row in the "MOS / Intelligibility / Comprehension%" layout.
inline std::string render_summary(const ScoreSummary& s) {
  char buf[96];
  if (s.comprehension_pct)
    std::snprintf(buf, sizeof(buf), "%.3f / %.3f / %.2f%%", s.mos,
                  s.intelligibility, *s.comprehension_pct);
  else
    std::snprintf(buf, sizeof(buf), "%.3f / %.3f / -", s.mos,
                  s.intelligibility);
  return buf;
}

}  // namespace ttskit

#endif  // TTSKIT_EVAL_RATINGS_HPP_
