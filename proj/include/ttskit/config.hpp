// ttskit/config.hpp

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

#ifndef TTSKIT_CONFIG_HPP_
#define TTSKIT_CONFIG_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>

#include "ttskit/common.hpp"

namespace ttskit {

// Flat `key = value` configuration with '#' comments. Keys may be dotted
// (section.key). Values are taken verbatim after trimming, so strip sets and
// delimiter sets can hold arbitrary punctuation.
class KvConfig {
 public:
  static KvConfig parse_file(const std::filesystem::path& path) {
    KvConfig cfg;
    cfg.source_ = path.string();
    cfg.dir_ = path.has_parent_path() ? path.parent_path()
                                      : std::filesystem::path(".");
    std::size_t lineno = 0;
    for (const std::string& raw : read_lines(path)) {
      ++lineno;
      std::string_view line = trim(raw);
      if (line.empty() || line.front() == '#') continue;
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos)
        throw ParseError(cfg.source_, lineno, 0, "expected 'key = value'");
      std::string key(trim(line.substr(0, eq)));
      std::string value(trim(line.substr(eq + 1)));
      if (key.empty())
        throw ParseError(cfg.source_, lineno, 0, "empty key");
      if (cfg.values_.count(key))
        throw ParseError(cfg.source_, lineno, 0, "duplicate key '" + key + "'");
      cfg.values_[key] = value;
    }
    return cfg;
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string get_string(const std::string& key,
                         std::optional<std::string> def = std::nullopt) const {
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
    if (def) return *def;
    throw ConfigError(source_ + ": missing required key '" + key + "'");
  }

  long get_int(const std::string& key, std::optional<long> def = std::nullopt) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
      if (def) return *def;
      throw ConfigError(source_ + ": missing required key '" + key + "'");
    }
    try {
      return parse_long(it->second, source_, 0);
    } catch (const ParseError&) {
      throw ConfigError(source_ + ": key '" + key + "' is not an integer: '" +
                        it->second + "'");
    }
  }

  double get_double(const std::string& key,
                    std::optional<double> def = std::nullopt) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
      if (def) return *def;
      throw ConfigError(source_ + ": missing required key '" + key + "'");
    }
    try {
      return parse_double(it->second, source_, 0);
    } catch (const ParseError&) {
      throw ConfigError(source_ + ": key '" + key + "' is not a number: '" +
                        it->second + "'");
    }
  }

  bool get_bool(const std::string& key,
                std::optional<bool> def = std::nullopt) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
      if (def) return *def;
      throw ConfigError(source_ + ": missing required key '" + key + "'");
    }
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError(source_ + ": key '" + key + "' is not a boolean: '" + v +
                      "'");
  }

  // A path value, resolved relative to the config file's directory.
  std::filesystem::path get_path(const std::string& key) const {
    std::filesystem::path p = get_string(key);
    if (p.is_absolute()) return p;
    return dir_ / p;
  }

  // Schema check: every present key must be in `allowed`.
  void reject_unknown_keys(const std::set<std::string>& allowed) const {
    for (const auto& [key, value] : values_) {
      if (!allowed.count(key))
        throw ConfigError(source_ + ": unknown key '" + key + "'");
    }
  }

  const std::string& source() const { return source_; }
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::map<std::string, std::string> values_;
  std::string source_ = "<config>";
  std::filesystem::path dir_ = ".";
};

}  // namespace ttskit

#endif  // TTSKIT_CONFIG_HPP_
