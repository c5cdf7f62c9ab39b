// ttskit/g2p.hpp
//
// Rule-based grapheme-to-phoneme conversion with pluggable rewrite tables.

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

#ifndef TTSKIT_G2P_HPP_
#define TTSKIT_G2P_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "ttskit/common.hpp"
#include "ttskit/phoneset.hpp"

namespace ttskit {

struct G2PError : DataError {
  explicit G2PError(const std::string& msg) : DataError(msg) {}
};

struct G2PRule {
  std::vector<char32_t> pattern;    // grapheme sequence
  std::vector<std::string> phones;  // emitted phone sequence
};

struct G2PRules {
  std::vector<G2PRule> rules;  // priority order
  bool longest_match_first = true;

  // One rule per line: `graphemes phone phone...`. An optional directive
  // `match first` switches to rule-order priority instead of longest match.
  static G2PRules parse_file(const std::filesystem::path& path,
                             const PhoneSet* phoneset = nullptr) {
    G2PRules out;
    std::size_t lineno = 0;
    for (const std::string& raw : read_lines(path)) {
      ++lineno;
      std::string_view line = trim(raw);
      if (line.empty() || line.front() == '#') continue;
      std::vector<std::string> f = split_whitespace(line);
      if (f[0] == "match") {
        if (f.size() != 2 || (f[1] != "first" && f[1] != "longest"))
          throw ParseError(path.string(), lineno, 0,
                           "expected 'match first' or 'match longest'");
        out.longest_match_first = (f[1] == "longest");
        continue;
      }
      if (f.size() < 2)
        throw ParseError(path.string(), lineno, 0,
                         "expected 'graphemes phone...'");
      G2PRule rule;
      if (!utf8_decode(f[0], &rule.pattern))
        throw ParseError(path.string(), lineno, 0,
                         "grapheme pattern is not valid UTF-8");
      rule.phones.assign(f.begin() + 1, f.end());
      if (phoneset) {
        for (const auto& p : rule.phones)
          if (!phoneset->contains(p))
            throw ParseError(path.string(), lineno, 0,
                             "rule emits unknown phone '" + p + "'");
      }
      out.rules.push_back(std::move(rule));
    }
    return out;
  }
};

// Deterministic left-to-right application. Candidates at each position are
// ordered longest pattern first (rule order breaking ties) or, with
// longest_match_first off, purely by rule order. A greedy choice whose
// remainder cannot be covered is backtracked, so "kam" against
// {k, ka, am} still parses as k + am.
inline std::vector<std::string> g2p(const std::string& word,
                                    const G2PRules& rules) {
  std::vector<char32_t> cps;
  if (!utf8_decode(word, &cps))
    throw G2PError("g2p: word '" + word + "' is not valid UTF-8");
  const std::size_t n = cps.size();

  auto candidates = [&](std::size_t pos) {
    std::vector<const G2PRule*> out;
    for (const G2PRule& rule : rules.rules) {
      if (rule.pattern.size() > n - pos || rule.pattern.empty()) continue;
      bool match = true;
      for (std::size_t k = 0; k < rule.pattern.size(); ++k)
        if (cps[pos + k] != rule.pattern[k]) {
          match = false;
          break;
        }
      if (match) out.push_back(&rule);
    }
    if (rules.longest_match_first) {
      std::stable_sort(out.begin(), out.end(),
                       [](const G2PRule* a, const G2PRule* b) {
                         return a->pattern.size() > b->pattern.size();
                       });
    }
    return out;
  };

  std::vector<const G2PRule*> chosen(n, nullptr);
  std::vector<char> dead(n, 0);  // positions proven uncoverable
  std::size_t furthest_fail = 0;
  auto solve = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == n) return true;
    if (dead[pos]) return false;
    for (const G2PRule* rule : candidates(pos)) {
      if (self(self, pos + rule->pattern.size())) {
        chosen[pos] = rule;
        return true;
      }
    }
    dead[pos] = 1;
    furthest_fail = std::max(furthest_fail, pos);
    return false;
  };
  if (!solve(solve, 0)) {
    std::string grapheme;
    utf8_append(cps[furthest_fail], &grapheme);
    throw G2PError("g2p: no rule covers grapheme '" + grapheme +
                   "' in word '" + word + "'");
  }

  std::vector<std::string> phones;
  std::size_t pos = 0;
  while (pos < n) {
    const G2PRule* rule = chosen[pos];
    phones.insert(phones.end(), rule->phones.begin(), rule->phones.end());
    pos += rule->pattern.size();
  }
  return phones;
}

}  // namespace ttskit

#endif  // TTSKIT_G2P_HPP_
