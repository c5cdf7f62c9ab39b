// ttskit/phoneset.hpp

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

#ifndef TTSKIT_PHONESET_HPP_
#define TTSKIT_PHONESET_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ttskit/common.hpp"

namespace ttskit {

// Phone inventory plus named phone categories (common-label-set style).
// Phone symbols may not contain label/question delimiter characters.
struct PhoneSet {
  std::set<std::string> phones;
  std::string silence_symbol = "sil";
  std::map<std::string, std::set<std::string>> categories;

  bool contains(const std::string& p) const { return phones.count(p) > 0; }

  static bool valid_symbol(const std::string& p) {
    if (p.empty()) return false;
    for (char c : p) {
      if (std::isspace(static_cast<unsigned char>(c))) return false;
      if (c == '^' || c == '-' || c == '+' || c == '=' || c == '*' ||
          c == ',' || c == '{' || c == '}' || c == '"')
        return false;
    }
    return true;
  }

  void validate() const {
    if (phones.empty()) throw ConfigError("phoneset: no phones defined");
    for (const auto& p : phones)
      if (!valid_symbol(p))
        throw ConfigError("phoneset: invalid phone symbol '" + p + "'");
    if (!contains(silence_symbol))
      throw ConfigError("phoneset: silence symbol '" + silence_symbol +
                        "' is not in the phone inventory");
    for (const auto& [name, members] : categories) {
      if (members.empty())
        throw ConfigError("phoneset: category '" + name + "' is empty");
      for (const auto& p : members)
        if (!contains(p))
          throw ConfigError("phoneset: category '" + name +
                            "' references unknown phone '" + p + "'");
    }
  }

  // Line-oriented file:
  //   silence <phone>
  //   phones <phone> <phone> ...
  //   category <name> <phone> ...
  static PhoneSet parse_file(const std::filesystem::path& path) {
    PhoneSet ps;
    ps.silence_symbol.clear();
    std::size_t lineno = 0;
    for (const std::string& raw : read_lines(path)) {
      ++lineno;
      std::string_view line = trim(raw);
      if (line.empty() || line.front() == '#') continue;
      std::vector<std::string> f = split_whitespace(line);
      if (f[0] == "silence") {
        if (f.size() != 2)
          throw ParseError(path.string(), lineno, 0,
                           "expected 'silence <phone>'");
        ps.silence_symbol = f[1];
      } else if (f[0] == "phones") {
        if (f.size() < 2)
          throw ParseError(path.string(), lineno, 0,
                           "expected 'phones <phone>...'");
        ps.phones.insert(f.begin() + 1, f.end());
      } else if (f[0] == "category") {
        if (f.size() < 3)
          throw ParseError(path.string(), lineno, 0,
                           "expected 'category <name> <phone>...'");
        ps.categories[f[1]].insert(f.begin() + 2, f.end());
      } else {
        throw ParseError(path.string(), lineno, 0,
                         "unknown directive '" + f[0] + "'");
      }
    }
    if (ps.silence_symbol.empty())
      throw ParseError(path.string(), lineno, 0, "missing 'silence' line");
    ps.validate();
    return ps;
  }

  std::string render() const {
    std::string out = "silence " + silence_symbol + "\nphones";
    for (const auto& p : phones) {
      out += ' ';
      out += p;
    }
    out += '\n';
    for (const auto& [name, members] : categories) {
      out += "category " + name;
      for (const auto& p : members) {
        out += ' ';
        out += p;
      }
      out += '\n';
    }
    return out;
  }
};

}  // namespace ttskit

#endif  // TTSKIT_PHONESET_HPP_
