// ttskit/arpa.hpp
//
// ARPA back-off n-gram file reader/writer. Section ordering is fixed:
// \data\ header, ascending per-order sections, \end\. Entries are sorted by
// word strings so exports are byte-deterministic.

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

#ifndef TTSKIT_ARPA_HPP_
#define TTSKIT_ARPA_HPP_

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "ttskit/common.hpp"
#include "ttskit/ngram_model.hpp"

namespace ttskit {

inline std::string export_arpa(const NgramModel& model) {
  const int n = model.order();
  std::string out;
  out += "\\data\\\n";
  for (int k = 1; k <= n; ++k)
    out += "ngram " + std::to_string(k) + "=" +
           std::to_string(model.prob_levels()[k].size()) + "\n";
  char buf[64];
  for (int k = 1; k <= n; ++k) {
    out += "\n\\" + std::to_string(k) + "-grams:\n";
    // Sort by the words themselves, not internal ids.
    std::vector<std::pair<std::vector<std::string>,
                          const NgramModel::ProbEntry*>> rows;
    rows.reserve(model.prob_levels()[k].size());
    for (const auto& [gram, entry] : model.prob_levels()[k]) {
      std::vector<std::string> ws;
      ws.reserve(gram.size());
      for (auto id : gram) ws.push_back(model.word(id));
      rows.emplace_back(std::move(ws), &entry);
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [ws, entry] : rows) {
      std::snprintf(buf, sizeof(buf), "%.7f", entry->log10_prob);
      out += buf;
      for (const auto& w : ws) {
        out += '\t';
        out += w;
      }
      if (entry->has_bow) {
        std::snprintf(buf, sizeof(buf), "\t%.7f", entry->log10_bow);
        out += buf;
      }
      out += '\n';
    }
  }
  out += "\n\\end\\\n";
  return out;
}

inline void export_arpa_file(const NgramModel& model,
                             const std::filesystem::path& path) {
  write_file_atomic(path, export_arpa(model));
}

namespace detail {

inline bool is_number(const std::string& s) {
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  return end != s.c_str() && *end == '\0';
}

}  // namespace detail

inline NgramModel import_arpa_text(const std::string& text,
                                   const std::string& where,
                                   LogBase log_base = LogBase::kLog10) {
  std::vector<std::string> lines = split_on(text, '\n');
  std::size_t i = 0;
  auto line_at = [&](std::size_t idx) -> std::string {
    std::string l = idx < lines.size() ? lines[idx] : std::string();
    if (!l.empty() && l.back() == '\r') l.pop_back();
    return l;
  };
  auto skip_blank = [&]() {
    while (i < lines.size() && trim(line_at(i)).empty()) ++i;
  };

  skip_blank();
  if (i >= lines.size() || trim(line_at(i)) != "\\data\\")
    throw ParseError(where, i + 1, 0, "malformed header: expected \\data\\");
  ++i;

  std::map<int, std::size_t> declared;
  int order = 0;
  while (i < lines.size()) {
    std::string l(trim(line_at(i)));
    if (l.empty()) break;
    if (l.rfind("ngram ", 0) != 0)
      throw ParseError(where, i + 1, 0,
                       "malformed header: expected 'ngram K=N', got '" + l +
                       "'");
    std::size_t eq = l.find('=');
    if (eq == std::string::npos)
      throw ParseError(where, i + 1, 0, "malformed header: missing '='");
    int k = static_cast<int>(parse_long(trim(l.substr(6, eq - 6)), where, i + 1));
    long cnt = parse_long(trim(l.substr(eq + 1)), where, i + 1);
    if (k < 1 || cnt < 0 || declared.count(k))
      throw ParseError(where, i + 1, 0, "malformed header: bad ngram line");
    declared[k] = static_cast<std::size_t>(cnt);
    order = std::max(order, k);
    ++i;
  }
  if (declared.empty())
    throw ParseError(where, i + 1, 0, "malformed header: no ngram counts");
  for (int k = 1; k <= order; ++k)
    if (!declared.count(k))
      throw ParseError(where, i + 1, 0,
                       "malformed header: missing count for order " +
                       std::to_string(k));

  // Collect rows per section keyed by word tuples.
  std::map<int, std::vector<std::tuple<std::vector<std::string>, double,
                                       double, bool>>> sections;
  for (int k = 1; k <= order; ++k) {
    skip_blank();
    std::string expect = "\\" + std::to_string(k) + "-grams:";
    if (i >= lines.size() || trim(line_at(i)) != expect)
      throw ParseError(where, i + 1, 0, "expected section " + expect);
    ++i;
    auto& rows = sections[k];
    while (i < lines.size()) {
      std::string l(trim(line_at(i)));
      if (l.empty() || l.front() == '\\') break;
      std::vector<std::string> f = split_whitespace(l);
      if (f.size() != static_cast<std::size_t>(k) + 1 &&
          f.size() != static_cast<std::size_t>(k) + 2)
        throw ParseError(where, i + 1, 0,
                         "section \\" + std::to_string(k) + "-grams: row has " +
                         std::to_string(f.size()) + " fields, expected " +
                         std::to_string(k + 1) + " or " + std::to_string(k + 2));
      if (!detail::is_number(f[0]))
        throw ParseError(where, i + 1, 0,
                         "non-numeric log-probability '" + f[0] + "'");
      double logp = parse_double(f[0], where, i + 1);
      bool has_bow = f.size() == static_cast<std::size_t>(k) + 2;
      double bow = 0.0;
      if (has_bow) {
        if (!detail::is_number(f.back()))
          throw ParseError(where, i + 1, 0,
                           "non-numeric backoff weight '" + f.back() + "'");
        bow = parse_double(f.back(), where, i + 1);
      }
      std::vector<std::string> ws(f.begin() + 1, f.begin() + 1 + k);
      rows.emplace_back(std::move(ws), logp, bow, has_bow);
      ++i;
    }
    if (rows.size() != declared[k])
      throw ParseError(where, i + 1, 0,
                       "section \\" + std::to_string(k) + "-grams: header "
                       "declared " + std::to_string(declared[k]) +
                       " entries, found " + std::to_string(rows.size()));
  }
  skip_blank();
  if (i >= lines.size() || trim(line_at(i)) != "\\end\\")
    throw ParseError(where, i + 1, 0, "missing \\end\\ marker");

  // Vocabulary comes from the unigram section; higher orders must not
  // introduce new words.
  std::vector<std::string> words;
  std::map<std::string, NgramModel::WordId> ids;
  for (const auto& [ws, logp, bow, has_bow] : sections[1]) {
    if (ids.count(ws[0]))
      throw ParseError(where, 0, 0, "duplicate unigram '" + ws[0] + "'");
    ids[ws[0]] = static_cast<NgramModel::WordId>(words.size());
    words.push_back(ws[0]);
  }
  std::vector<NgramModel::ProbTable> levels(order + 1);
  for (int k = 1; k <= order; ++k) {
    for (const auto& [ws, logp, bow, has_bow] : sections[k]) {
      NgramModel::Key key;
      for (const auto& w : ws) {
        auto it = ids.find(w);
        if (it == ids.end())
          throw ParseError(where, 0, 0,
                           "word '" + w + "' in \\" + std::to_string(k) +
                           "-grams: has no unigram entry");
        key.push_back(it->second);
      }
      NgramModel::ProbEntry e;
      e.log10_prob = logp;
      e.log10_bow = bow;
      e.has_bow = has_bow;
      if (!levels[k].emplace(std::move(key), e).second)
        throw ParseError(where, 0, 0, "duplicate n-gram in \\" +
                         std::to_string(k) + "-grams: section");
    }
  }

  NgramConfig cfg;
  cfg.order = order;
  cfg.log_base = log_base;
  return NgramModel::from_tables(order, cfg, words, std::move(levels));
}

inline NgramModel import_arpa_file(const std::filesystem::path& path,
                                   LogBase log_base = LogBase::kLog10) {
  return import_arpa_text(read_file_text(path), path.string(), log_base);
}

}  // namespace ttskit

#endif  // TTSKIT_ARPA_HPP_
