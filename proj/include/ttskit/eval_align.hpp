// ttskit/eval_align.hpp
//
// Synthesis-error counting via minimum-edit alignment of reference vs
// produced transcripts. Costs: match 0, substitute/insert/delete 1, with a
// deterministic equal-cost preference match > substitute > delete > insert
// applied left to right (among minimum-cost alignments, the op sequence is
// preference-minimal read from the front, so an inserted duplicate lands
// after its matched twin).
//
// Classification of the aligned ops:
//   deletion          -> word skip
//   substitution      -> mispronunciation
//   insertion         -> repetition when the inserted token equals the
//                        nearest preceding aligned (match/substitute)
//                        hypothesis token, otherwise a plain insertion

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

#ifndef TTSKIT_EVAL_ALIGN_HPP_
#define TTSKIT_EVAL_ALIGN_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "ttskit/common.hpp"

namespace ttskit {

enum class EditOp { kMatch, kSubstitute, kDelete, kInsert };

inline const char* edit_op_name(EditOp op) {
  switch (op) {
    case EditOp::kMatch: return "match";
    case EditOp::kSubstitute: return "sub";
    case EditOp::kDelete: return "del";
    case EditOp::kInsert: return "ins";
  }
  return "?";
}

struct AlignmentStep {
  EditOp op;
  // Indices into ref/hyp; -1 when the op does not consume from that side.
  std::ptrdiff_t ref_index = -1;
  std::ptrdiff_t hyp_index = -1;
};

struct ErrorCounts {
  std::size_t skips = 0;              // deletions
  std::size_t repetitions = 0;        // duplicate insertions
  std::size_t insertions = 0;         // non-duplicate insertions
  std::size_t mispronunciations = 0;  // substitutions
  std::size_t edit_distance = 0;
  std::vector<AlignmentStep> trace;

  void add(const ErrorCounts& other) {
    skips += other.skips;
    repetitions += other.repetitions;
    insertions += other.insertions;
    mispronunciations += other.mispronunciations;
    edit_distance += other.edit_distance;
  }
};

inline ErrorCounts count_errors(const std::vector<std::string>& ref,
                                const std::vector<std::string>& hyp) {
  const std::size_t m = ref.size();
  const std::size_t n = hyp.size();
  // Suffix costs: suffix[i][j] = distance(ref[i..m), hyp[j..n)). Walking
  // forward over this table lets the preference apply left to right.
  std::vector<std::size_t> suffix((m + 1) * (n + 1), 0);
  auto idx = [n](std::size_t i, std::size_t j) { return i * (n + 1) + j; };
  for (std::size_t i = 0; i <= m; ++i) suffix[idx(i, n)] = m - i;
  for (std::size_t j = 0; j <= n; ++j) suffix[idx(m, j)] = n - j;
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      bool eq = ref[i] == hyp[j];
      std::size_t best = suffix[idx(i + 1, j + 1)] + (eq ? 0 : 1);
      best = std::min(best, suffix[idx(i + 1, j)] + 1);
      best = std::min(best, suffix[idx(i, j + 1)] + 1);
      suffix[idx(i, j)] = best;
    }
  }

  ErrorCounts out;
  out.edit_distance = suffix[idx(0, 0)];
  std::size_t i = 0, j = 0;
  while (i < m || j < n) {
    std::size_t here = suffix[idx(i, j)];
    bool eq = i < m && j < n && ref[i] == hyp[j];
    if (eq && suffix[idx(i + 1, j + 1)] == here) {
      out.trace.push_back({EditOp::kMatch, static_cast<std::ptrdiff_t>(i),
                           static_cast<std::ptrdiff_t>(j)});
      ++i;
      ++j;
    } else if (i < m && j < n && !eq &&
               suffix[idx(i + 1, j + 1)] + 1 == here) {
      out.trace.push_back({EditOp::kSubstitute,
                           static_cast<std::ptrdiff_t>(i),
                           static_cast<std::ptrdiff_t>(j)});
      ++i;
      ++j;
    } else if (i < m && suffix[idx(i + 1, j)] + 1 == here) {
      out.trace.push_back(
          {EditOp::kDelete, static_cast<std::ptrdiff_t>(i), -1});
      ++i;
    } else {
      out.trace.push_back(
          {EditOp::kInsert, -1, static_cast<std::ptrdiff_t>(j)});
      ++j;
    }
  }

  const std::string* last_aligned = nullptr;
  for (const AlignmentStep& step : out.trace) {
    switch (step.op) {
      case EditOp::kMatch:
        last_aligned = &hyp[static_cast<std::size_t>(step.hyp_index)];
        break;
      case EditOp::kSubstitute:
        ++out.mispronunciations;
        last_aligned = &hyp[static_cast<std::size_t>(step.hyp_index)];
        break;
      case EditOp::kDelete:
        ++out.skips;
        break;
      case EditOp::kInsert: {
        const std::string& tok = hyp[static_cast<std::size_t>(step.hyp_index)];
        if (last_aligned && *last_aligned == tok)
          ++out.repetitions;
        else
          ++out.insertions;
        break;
      }
    }
  }
  return out;
}

struct ErrorReport {
  struct Utterance {
    std::string id;
    ErrorCounts counts;
  };
  std::vector<Utterance> utterances;
  ErrorCounts totals;

  void add(const std::string& id, ErrorCounts counts) {
    totals.add(counts);
    utterances.push_back({id, std::move(counts)});
  }
};

inline ErrorReport report_errors(
    const std::vector<std::vector<std::string>>& refs,
    const std::vector<std::vector<std::string>>& hyps) {
  if (refs.size() != hyps.size())
    throw DataError("eval errors: " + std::to_string(refs.size()) +
                    " reference vs " + std::to_string(hyps.size()) +
                    " hypothesis utterances");
  ErrorReport report;
  for (std::size_t u = 0; u < refs.size(); ++u)
    report.add("utt" + std::to_string(u + 1), count_errors(refs[u], hyps[u]));
  return report;
}

inline std::string render_alignment_trace(
    const std::vector<std::string>& ref, const std::vector<std::string>& hyp,
    const ErrorCounts& counts) {
  std::string out;
  for (const AlignmentStep& step : counts.trace) {
    out += edit_op_name(step.op);
    if (step.ref_index >= 0)
      out += " ref:" + ref[static_cast<std::size_t>(step.ref_index)];
    if (step.hyp_index >= 0)
      out += " hyp:" + hyp[static_cast<std::size_t>(step.hyp_index)];
    out += '\n';
  }
  return out;
}

}  // namespace ttskit

#endif  // TTSKIT_EVAL_ALIGN_HPP_
