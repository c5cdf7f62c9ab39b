// ttskit/ngram_model.hpp
//
// Interpolated Kneser-Ney n-gram language model (default bigram).
//
// Model definition, for order n over sentences padded with a single <s> and
// </s> marker (no <s> for n = 1):
//
//   level n counts:   raw padded-window counts c_n.
//   level k < n:      continuation counts, c_k(g) = |{x : c_{k+1}(x.g) > 0}|,
//                     except g starting with <s> keeps its raw window count
//                     (nothing can precede <s>).
//   discount D_k:     n1/(n1 + 2*n2) over the level-k count-of-counts;
//                     if n1 == 0 or n2 == 0 the estimator degenerates and
//                     D_k = 0.5 with a warning.
//   unigram level:    P1(w) = max(c_1(w) - D_1, 0)/N + (D_1*K/N) * 1/|V|
//                     over the prediction vocabulary V (kept words, </s>,
//                     and <unk> when enabled; never <s>), N = sum of c_1
//                     over V, K = number of nonzero c_1 entries in V.
//   level k >= 2:     P_k(w|h) = max(c_k(h.w) - D_k, 0)/tot(h)
//                               + D_k * fanout(h)/tot(h) * P_{k-1}(w|h[1:])
//                     with tot(h) = sum_w c_k(h.w), fanout(h) the number of
//                     distinct continuations; an unseen history backs off to
//                     P_{k-1} with weight 1.
//
// Every per-history distribution sums to 1 over V by construction, and the
// uniform 1/|V| base keeps all probabilities strictly positive.

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

#ifndef TTSKIT_NGRAM_MODEL_HPP_
#define TTSKIT_NGRAM_MODEL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ttskit/common.hpp"

namespace ttskit {

inline constexpr const char* kSentStart = "<s>";
inline constexpr const char* kSentEnd = "</s>";
inline constexpr const char* kUnknown = "<unk>";

enum class LogBase { kLog10, kNatural };

struct NgramConfig {
  int order = 2;
  long unknown_floor = 1;     // words seen fewer times map to <unk>
  bool include_unknown = true;
  LogBase log_base = LogBase::kLog10;
};

struct ScoredBigram {
  std::string left;
  std::string right;
  double log_likelihood = 0.0;  // in the model's configured base
};

class NgramModel {
 public:
  using WordId = std::uint32_t;
  using Key = std::vector<WordId>;

  struct ProbEntry {
    double log10_prob = 0.0;
    double log10_bow = 0.0;
    bool has_bow = false;
  };

  using CountTable = std::map<Key, std::uint64_t>;
  using ProbTable = std::map<Key, ProbEntry>;

  NgramModel() = default;

  // -------------------------------------------------------------------------
  // Training
  // -------------------------------------------------------------------------

  static NgramModel train(const std::vector<std::vector<std::string>>& sentences,
                          const NgramConfig& cfg,
                          std::vector<std::string>* warnings = nullptr) {
    if (cfg.order < 1) throw DataError("lm train: order must be >= 1");
    if (cfg.unknown_floor > 1 && !cfg.include_unknown)
      throw ConfigError(
          "lm train: unknown_floor > 1 requires the unknown marker");
    bool any_nonempty = false;
    for (const auto& s : sentences)
      if (!s.empty()) any_nonempty = true;
    if (!any_nonempty) throw DataError("lm train: empty corpus");

    NgramModel m;
    m.cfg_ = cfg;
    const int n = cfg.order;

    m.start_id_ = m.intern(kSentStart);
    m.end_id_ = m.intern(kSentEnd);
    if (cfg.include_unknown) m.unk_id_ = m.intern(kUnknown);

    // Raw word frequencies for the unknown floor.
    std::map<std::string, std::uint64_t> word_freq;
    for (const auto& s : sentences)
      for (const auto& w : s) {
        if (w == kSentStart || w == kSentEnd || w == kUnknown)
          throw DataError("lm train: corpus contains reserved marker '" + w +
                          "'");
        ++word_freq[w];
      }
    for (const auto& [word, freq] : word_freq)
      if (freq >= static_cast<std::uint64_t>(cfg.unknown_floor))
        m.intern(word);

    // Top-level raw counts over padded sentences.
    m.counts_.assign(n + 1, CountTable());
    std::uint64_t top_windows = 0;
    for (const auto& s : sentences) {
      if (s.empty()) continue;
      Key ids;
      if (n >= 2) ids.push_back(m.start_id_);
      for (const auto& w : s) ids.push_back(m.map_word(w));
      ids.push_back(m.end_id_);
      if (ids.size() < static_cast<std::size_t>(n)) continue;
      for (std::size_t i = 0; i + n <= ids.size(); ++i) {
        Key g(ids.begin() + i, ids.begin() + i + n);
        ++m.counts_[n][g];
        ++top_windows;
      }
      // Raw counts for lower-order n-grams anchored at <s>; these have no
      // left context, so continuation counts cannot stand in for them.
      for (int k = 2; k < n; ++k) {
        if (ids.size() < static_cast<std::size_t>(k)) continue;
        Key g(ids.begin(), ids.begin() + k);
        ++m.counts_[k][g];
      }
    }
    if (top_windows == 0)
      throw DataError("lm train: order " + std::to_string(n) +
                      " exceeds every sentence length including markers");

    // Continuation counts for lower levels, derived one level up.
    for (int k = n - 1; k >= 1; --k) {
      for (const auto& [gram, count] : m.counts_[k + 1]) {
        Key suffix(gram.begin() + 1, gram.end());
        if (suffix.front() == m.start_id_) continue;  // raw-counted above
        ++m.counts_[k][suffix];
      }
    }

    // Per-level discounts.
    m.discounts_.assign(n + 1, 0.0);
    for (int k = 1; k <= n; ++k) {
      std::uint64_t n1 = 0, n2 = 0;
      for (const auto& [gram, count] : m.counts_[k]) {
        if (k < n && gram.front() == m.start_id_) continue;
        if (count == 1) ++n1;
        if (count == 2) ++n2;
      }
      if (n1 == 0 || n2 == 0) {
        m.discounts_[k] = 0.5;
        if (warnings)
          warnings->push_back(
              "lm train: degenerate count-of-counts at order " +
              std::to_string(k) + " (n1=" + std::to_string(n1) +
              ", n2=" + std::to_string(n2) + "); discount fixed at 0.5");
      } else {
        m.discounts_[k] =
            static_cast<double>(n1) / (static_cast<double>(n1) + 2.0 * n2);
      }
    }

    m.build_prob_tables();
    return m;
  }

  // Assembles a model directly from probability tables (ARPA import).
  static NgramModel from_tables(int order, const NgramConfig& cfg,
                                const std::vector<std::string>& words,
                                std::vector<ProbTable> levels) {
    NgramModel m;
    m.cfg_ = cfg;
    m.cfg_.order = order;
    for (const auto& w : words) m.intern(w);
    auto find = [&](const char* w) -> std::optional<WordId> {
      auto it = m.word_to_id_.find(w);
      if (it == m.word_to_id_.end()) return std::nullopt;
      return it->second;
    };
    auto start = find(kSentStart);
    auto end = find(kSentEnd);
    if (!start || !end)
      throw DataError("lm import: model lacks sentence markers");
    m.start_id_ = *start;
    m.end_id_ = *end;
    auto unk = find(kUnknown);
    if (unk) {
      m.unk_id_ = *unk;
      m.cfg_.include_unknown = true;
    } else {
      m.cfg_.include_unknown = false;
    }
    m.probs_ = std::move(levels);
    m.counts_.clear();
    return m;
  }

  // -------------------------------------------------------------------------
  // Queries
  // -------------------------------------------------------------------------

  int order() const { return cfg_.order; }
  const NgramConfig& config() const { return cfg_; }
  const std::vector<std::string>& words() const { return words_; }
  bool has_unknown() const { return unk_id_.has_value(); }

  // Conditional log10 P(word | history); history may be any length and is
  // truncated to the model order. Out-of-vocabulary words map to <unk>.
  double log10_cond(const std::vector<std::string>& history,
                    const std::string& word) const {
    Key h;
    std::size_t keep = std::min<std::size_t>(history.size(), cfg_.order - 1);
    for (std::size_t i = history.size() - keep; i < history.size(); ++i)
      h.push_back(map_query_word(history[i]));
    return log10_cond_ids(h, map_query_word(word));
  }

  double cond_prob(const std::vector<std::string>& history,
                   const std::string& word) const {
    return std::pow(10.0, log10_cond(history, word));
  }

  // One score per adjacent pair, including (<s>, w1) and (wN, </s>).
  std::vector<ScoredBigram> score_bigrams(
      const std::vector<std::string>& tokens) const {
    if (cfg_.order < 2)
      throw DataError("lm score: bigram scoring requires order >= 2");
    std::vector<ScoredBigram> out;
    if (tokens.empty()) return out;
    std::vector<std::string> chain;
    chain.reserve(tokens.size() + 2);
    chain.push_back(kSentStart);
    chain.insert(chain.end(), tokens.begin(), tokens.end());
    chain.push_back(kSentEnd);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      Key h{map_query_word(chain[i])};
      double lp = log10_cond_ids(h, map_query_word(chain[i + 1]));
      out.push_back({chain[i], chain[i + 1], from_log10(lp)});
    }
    return out;
  }

  // Sum of bigram scores for order >= 2; unigram chain for order 1.
  double sentence_log_likelihood(const std::vector<std::string>& tokens) const {
    if (cfg_.order >= 2) {
      double total = 0.0;
      for (const auto& sb : score_bigrams(tokens)) total += sb.log_likelihood;
      return total;
    }
    double total = 0.0;
    for (const auto& w : tokens)
      total += from_log10(log10_cond_ids({}, map_query_word(w)));
    total += from_log10(log10_cond_ids({}, end_id_));
    return total;
  }

  double normalized_log_likelihood(
      const std::vector<std::string>& tokens) const {
    if (tokens.empty())
      throw DataError("lm score: normalized score of a zero-token sentence");
    return sentence_log_likelihood(tokens) /
           static_cast<double>(tokens.size());
  }

  // Words a conditional distribution ranges over: kept words, </s>, and
  // <unk> when enabled. Never <s>.
  std::vector<std::string> prediction_vocab() const {
    std::vector<std::string> out;
    for (WordId id = 0; id < words_.size(); ++id)
      if (id != start_id_) out.push_back(words_[id]);
    return out;
  }

  // -------------------------------------------------------------------------
  // Introspection (ARPA I/O and tests)
  // -------------------------------------------------------------------------

  const std::vector<ProbTable>& prob_levels() const { return probs_; }
  const std::vector<CountTable>& count_levels() const { return counts_; }
  const std::vector<double>& discounts() const { return discounts_; }

  const std::string& word(WordId id) const { return words_.at(id); }
  std::optional<WordId> find_word(const std::string& w) const {
    auto it = word_to_id_.find(w);
    if (it == word_to_id_.end()) return std::nullopt;
    return it->second;
  }

  double from_log10(double log10_value) const {
    return cfg_.log_base == LogBase::kLog10 ? log10_value
                                            : log10_value * std::numbers::ln10;
  }

 private:
  WordId intern(const std::string& w) {
    auto it = word_to_id_.find(w);
    if (it != word_to_id_.end()) return it->second;
    WordId id = static_cast<WordId>(words_.size());
    words_.push_back(w);
    word_to_id_.emplace(w, id);
    return id;
  }

  WordId map_word(const std::string& w) const {
    auto it = word_to_id_.find(w);
    if (it != word_to_id_.end()) return it->second;
    if (unk_id_) return *unk_id_;
    throw DataError("lm: word '" + w +
                    "' is out of vocabulary and the model has no <unk>");
  }
  WordId map_query_word(const std::string& w) const { return map_word(w); }

  double log10_cond_ids(Key history, WordId w) const {
    double backoff_sum = 0.0;
    while (true) {
      Key g = history;
      g.push_back(w);
      const ProbTable& level = probs_.at(g.size());
      auto it = level.find(g);
      if (it != level.end()) return backoff_sum + it->second.log10_prob;
      if (history.empty())
        throw DataError("lm: word '" + words_.at(w) +
                        "' missing from the unigram table");
      const ProbTable& hist_level = probs_.at(history.size());
      auto hit = hist_level.find(history);
      if (hit != hist_level.end() && hit->second.has_bow)
        backoff_sum += hit->second.log10_bow;
      history.erase(history.begin());
    }
  }

  void build_prob_tables() {
    const int n = cfg_.order;
    probs_.assign(n + 1, ProbTable());

    // Unigram level with the uniform base distribution.
    std::vector<WordId> vp;
    for (WordId id = 0; id < words_.size(); ++id)
      if (id != start_id_) vp.push_back(id);
    double total = 0.0;
    std::uint64_t nonzero = 0;
    for (WordId id : vp) {
      auto it = counts_[1].find(Key{id});
      std::uint64_t c = it == counts_[1].end() ? 0 : it->second;
      total += static_cast<double>(c);
      if (c > 0) ++nonzero;
    }
    const double d1 = discounts_[1];
    const double uniform = 1.0 / static_cast<double>(vp.size());
    for (WordId id : vp) {
      auto it = counts_[1].find(Key{id});
      double c = it == counts_[1].end() ? 0.0 : static_cast<double>(it->second);
      double p = std::max(c - d1, 0.0) / total +
                 d1 * static_cast<double>(nonzero) / total * uniform;
      ProbEntry e;
      e.log10_prob = std::log10(p);
      probs_[1][Key{id}] = e;
    }
    if (n >= 2) {
      ProbEntry start_entry;
      start_entry.log10_prob = -99.0;  // <s> is context only, never predicted
      probs_[1][Key{start_id_}] = start_entry;
    }

    // Higher levels: interpolated values for observed n-grams, backoff
    // weights attached to their histories one level down.
    for (int k = 2; k <= n; ++k) {
      std::map<Key, std::pair<double, std::uint64_t>> hist;  // tot, fanout
      for (const auto& [gram, count] : counts_[k]) {
        Key h(gram.begin(), gram.end() - 1);
        auto& [tot, fanout] = hist[h];
        tot += static_cast<double>(count);
        ++fanout;
      }
      const double dk = discounts_[k];
      for (const auto& [gram, count] : counts_[k]) {
        Key h(gram.begin(), gram.end() - 1);
        WordId w = gram.back();
        const auto& [tot, fanout] = hist.at(h);
        Key lower_hist(h.begin() + 1, h.end());
        double p_lower =
            std::pow(10.0, log10_cond_ids(std::move(lower_hist), w));
        double p = std::max(static_cast<double>(count) - dk, 0.0) / tot +
                   dk * static_cast<double>(fanout) / tot * p_lower;
        ProbEntry e;
        e.log10_prob = std::log10(p);
        probs_[k][gram] = e;
      }
      for (const auto& [h, stats] : hist) {
        auto it = probs_[k - 1].find(h);
        if (it == probs_[k - 1].end())
          throw DataError("lm train: internal error, history not listed one "
                          "level down");
        it->second.has_bow = true;
        it->second.log10_bow = std::log10(
            dk * static_cast<double>(stats.second) / stats.first);
      }
    }
  }

  NgramConfig cfg_;
  std::vector<std::string> words_;            // id -> word
  std::unordered_map<std::string, WordId> word_to_id_;
  WordId start_id_ = 0;
  WordId end_id_ = 0;
  std::optional<WordId> unk_id_;
  std::vector<CountTable> counts_;  // [k] for k = 1..order (index 0 unused)
  std::vector<double> discounts_;   // [k]
  std::vector<ProbTable> probs_;    // [k]
};

}  // namespace ttskit

#endif  // TTSKIT_NGRAM_MODEL_HPP_
