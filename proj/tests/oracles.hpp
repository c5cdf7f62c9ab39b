// tests/oracles.hpp
//
// Independent brute-force oracles used to pin expected values. These are
// written directly from the documented definitions and deliberately share no
// code with the library implementations they check.

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

#ifndef TTSKIT_TESTS_ORACLES_HPP_
#define TTSKIT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ttskit/eval_align.hpp"

namespace oracles {

// ---------------------------------------------------------------------------
// Interpolated Kneser-Ney reference
// ---------------------------------------------------------------------------
//
// Counts are built by direct scans over the padded corpus and probabilities
// are evaluated recursively from the definition at query time: raw counts at
// the top order; continuation counts below (raw for <s>-anchored n-grams);
// D_k = n1/(n1 + 2*n2) with the degenerate rule D = 0.5 when n1 or n2 is
// zero; unigram level interpolated with uniform 1/|V| over the prediction
// vocabulary.
class KnOracle {
 public:
  using Gram = std::vector<std::string>;

  KnOracle(const std::vector<std::vector<std::string>>& sentences, int order,
           bool include_unknown = true, long unknown_floor = 1)
      : order_(order), include_unknown_(include_unknown) {
    std::map<std::string, long> freq;
    for (const auto& s : sentences)
      for (const auto& w : s) ++freq[w];
    for (const auto& [w, c] : freq)
      if (c >= unknown_floor) kept_.insert(w);

    std::vector<Gram> padded;
    for (const auto& s : sentences) {
      if (s.empty()) continue;
      Gram ids;
      if (order_ >= 2) ids.push_back("<s>");
      for (const auto& w : s) ids.push_back(map_word(w));
      ids.push_back("</s>");
      padded.push_back(std::move(ids));
    }

    tables_.resize(order_ + 1);
    for (const auto& ids : padded) {
      if (ids.size() >= static_cast<std::size_t>(order_)) {
        for (std::size_t i = 0; i + order_ <= ids.size(); ++i)
          ++tables_[order_][Gram(ids.begin() + i, ids.begin() + i + order_)];
      }
      for (int k = 2; k < order_; ++k)
        if (ids.size() >= static_cast<std::size_t>(k))
          ++tables_[k][Gram(ids.begin(), ids.begin() + k)];
    }
    for (int k = order_ - 1; k >= 1; --k) {
      for (const auto& [gram, count] : tables_[k + 1]) {
        Gram suffix(gram.begin() + 1, gram.end());
        if (suffix.front() == "<s>") continue;
        ++tables_[k][suffix];
      }
    }

    discounts_.assign(order_ + 1, 0.0);
    for (int k = 1; k <= order_; ++k) {
      long n1 = 0, n2 = 0;
      for (const auto& [gram, count] : tables_[k]) {
        if (k < order_ && gram.front() == "<s>") continue;
        if (count == 1) ++n1;
        if (count == 2) ++n2;
      }
      discounts_[k] = (n1 == 0 || n2 == 0)
                          ? 0.5
                          : static_cast<double>(n1) / (n1 + 2.0 * n2);
    }

    pred_vocab_.assign(kept_.begin(), kept_.end());
    pred_vocab_.push_back("</s>");
    if (include_unknown_) pred_vocab_.push_back("<unk>");
  }

  const std::vector<std::string>& prediction_vocab() const {
    return pred_vocab_;
  }
  double discount(int level) const { return discounts_.at(level); }

  // P(word | history) with OOV words mapped to <unk> on both sides.
  double prob(std::vector<std::string> history,
              const std::string& word) const {
    if (history.size() > static_cast<std::size_t>(order_ - 1))
      history.erase(history.begin(),
                    history.end() - (order_ - 1));
    for (auto& h : history) h = map_word(h);
    return prob_mapped(history, map_word(word));
  }

 private:
  std::string map_word(const std::string& w) const {
    if (w == "<s>" || w == "</s>") return w;
    if (kept_.count(w)) return w;
    return "<unk>";
  }

  long count_at(int level, const Gram& g) const {
    auto it = tables_[level].find(g);
    return it == tables_[level].end() ? 0 : it->second;
  }

  double prob_mapped(const Gram& history, const std::string& word) const {
    const int level = static_cast<int>(history.size()) + 1;
    if (level == 1) {
      double total = 0.0;
      long nonzero = 0;
      for (const auto& w : pred_vocab_) {
        long c = count_at(1, {w});
        total += static_cast<double>(c);
        if (c > 0) ++nonzero;
      }
      double d1 = discounts_[1];
      double c = static_cast<double>(count_at(1, {word}));
      return std::max(c - d1, 0.0) / total +
             d1 * nonzero / total / static_cast<double>(pred_vocab_.size());
    }
    double tot = 0.0;
    long fanout = 0;
    for (const auto& w : pred_vocab_) {
      Gram g = history;
      g.push_back(w);
      long c = count_at(level, g);
      tot += static_cast<double>(c);
      if (c > 0) ++fanout;
    }
    Gram lower(history.begin() + 1, history.end());
    double p_lower = prob_mapped(lower, word);
    if (tot == 0.0) return p_lower;
    Gram g = history;
    g.push_back(word);
    double c = static_cast<double>(count_at(level, g));
    double dk = discounts_[level];
    return std::max(c - dk, 0.0) / tot + dk * fanout / tot * p_lower;
  }

  int order_;
  bool include_unknown_;
  std::set<std::string> kept_;
  std::vector<std::string> pred_vocab_;
  std::vector<std::map<Gram, long>> tables_;
  std::vector<double> discounts_;
};

// ---------------------------------------------------------------------------
// Exhaustive alignment reference
// ---------------------------------------------------------------------------
//
// Enumerates alignments as op sequences from the front, keeps the minimum
// cost, and among ties selects the preference-minimal sequence read left to
// right (match < sub < del < ins), which is the documented tie-break. A true
// lower bound (|remaining length difference|) prunes branches that cannot
// reach the best cost, without ever cutting a tying path.
inline ttskit::ErrorCounts oracle_count_errors(
    const std::vector<std::string>& ref, const std::vector<std::string>& hyp) {
  using ttskit::EditOp;
  const std::size_t m = ref.size();
  const std::size_t n = hyp.size();
  auto rank = [](EditOp op) {
    switch (op) {
      case EditOp::kMatch: return 0;
      case EditOp::kSubstitute: return 1;
      case EditOp::kDelete: return 2;
      case EditOp::kInsert: return 3;
    }
    return 4;
  };

  std::vector<EditOp> best;
  std::size_t best_cost = m + n + 1;
  std::vector<EditOp> current;

  auto consider = [&](std::size_t cost) {
    if (cost > best_cost) return;
    if (cost < best_cost) {
      best_cost = cost;
      best = current;
      return;
    }
    for (std::size_t k = 0; k < std::min(current.size(), best.size()); ++k) {
      if (rank(current[k]) != rank(best[k])) {
        if (rank(current[k]) < rank(best[k])) best = current;
        return;
      }
    }
  };

  auto walk = [&](auto&& self, std::size_t i, std::size_t j,
                  std::size_t cost) -> void {
    std::size_t ri = m - i, rj = n - j;
    std::size_t remaining = ri > rj ? ri - rj : rj - ri;
    if (cost + remaining > best_cost) return;
    if (i == m && j == n) {
      consider(cost);
      return;
    }
    if (i < m && j < n) {
      bool eq = ref[i] == hyp[j];
      current.push_back(eq ? EditOp::kMatch : EditOp::kSubstitute);
      self(self, i + 1, j + 1, cost + (eq ? 0 : 1));
      current.pop_back();
    }
    if (i < m) {
      current.push_back(EditOp::kDelete);
      self(self, i + 1, j, cost + 1);
      current.pop_back();
    }
    if (j < n) {
      current.push_back(EditOp::kInsert);
      self(self, i, j + 1, cost + 1);
      current.pop_back();
    }
  };
  walk(walk, 0, 0, 0);

  std::vector<EditOp> ops = best;
  ttskit::ErrorCounts out;
  out.edit_distance = best_cost;
  std::size_t j = 0;
  const std::string* last_aligned = nullptr;
  for (EditOp op : ops) {
    switch (op) {
      case EditOp::kMatch:
        last_aligned = &hyp[j++];
        break;
      case EditOp::kSubstitute:
        ++out.mispronunciations;
        last_aligned = &hyp[j++];
        break;
      case EditOp::kDelete:
        ++out.skips;
        break;
      case EditOp::kInsert:
        if (last_aligned && *last_aligned == hyp[j])
          ++out.repetitions;
        else
          ++out.insertions;
        ++j;
        break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pooled-Gaussian likelihood reference for tree clustering
// ---------------------------------------------------------------------------

// Per-frame data pooled the slow way: recompute mean/variance from raw
// vectors and evaluate the diagonal-Gaussian log-likelihood directly.
inline double pooled_gaussian_ll(const std::vector<std::vector<double>>& rows,
                                 double variance_floor) {
  const double n = static_cast<double>(rows.size());
  const std::size_t d = rows.front().size();
  double log_var_sum = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    double mean = 0.0;
    for (const auto& row : rows) mean += row[k];
    mean /= n;
    double var = 0.0;
    for (const auto& row : rows) var += (row[k] - mean) * (row[k] - mean);
    var /= n;
    log_var_sum += std::log(std::max(var, variance_floor));
  }
  return -0.5 * n *
         (static_cast<double>(d) * std::log(2.0 * M_PI * M_E) + log_var_sum);
}

// ---------------------------------------------------------------------------
// Deterministic corpus generators
// ---------------------------------------------------------------------------

inline std::vector<std::vector<std::string>> random_corpus(
    std::uint32_t seed, std::size_t vocab_size, std::size_t max_total_tokens) {
  std::mt19937 rng(seed);
  std::vector<std::string> vocab;
  for (std::size_t v = 0; v < vocab_size; ++v)
    vocab.push_back("w" + std::to_string(v));
  std::vector<std::vector<std::string>> corpus;
  std::size_t total = 0;
  std::uniform_int_distribution<std::size_t> len_dist(1, 6);
  std::uniform_int_distribution<std::size_t> word_dist(0, vocab_size - 1);
  while (total < max_total_tokens) {
    std::size_t len = std::min(len_dist(rng), max_total_tokens - total);
    if (len == 0) break;
    std::vector<std::string> sent;
    for (std::size_t i = 0; i < len; ++i) sent.push_back(vocab[word_dist(rng)]);
    total += len;
    corpus.push_back(std::move(sent));
  }
  return corpus;
}

}  // namespace oracles

#endif  // TTSKIT_TESTS_ORACLES_HPP_
