// ttskit/textnorm.hpp
//
// Multi-domain text cleaning: symbol stripping, table-driven transliteration,
// sentence splitting and whitespace tokenization.

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

#ifndef TTSKIT_TEXTNORM_HPP_
#define TTSKIT_TEXTNORM_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ttskit/common.hpp"
#include "ttskit/config.hpp"

namespace ttskit {

struct RawDocument {
  std::string id;
  std::string text;
  std::string source_tag;
};

struct NormalizedSentence {
  std::string id;  // "<doc_id>:<sentence_index>"
  std::vector<std::string> tokens;
  std::string doc_id;
  std::size_t sentence_index = 0;
  std::string source_tag;

  std::string text() const { return join(tokens, " "); }
};

struct TransliterationRule {
  std::vector<char32_t> pattern;          // matched anywhere, first rule wins
  std::vector<std::string> replacement;   // word sequence
};

struct NormalizationConfig {
  std::set<char32_t> strip_set;
  std::set<char32_t> sentence_delimiters;
  std::vector<TransliterationRule> transliteration;
  bool lowercase_fold = false;

  void validate() const {
    if (sentence_delimiters.empty())
      throw ConfigError("normalization: sentence_delimiters must be non-empty");
    std::set<std::vector<char32_t>> seen;
    for (const auto& rule : transliteration) {
      if (rule.pattern.empty())
        throw ConfigError("normalization: empty transliteration pattern");
      if (rule.replacement.empty())
        throw ConfigError("normalization: transliteration pattern '" +
                          utf8_encode(rule.pattern) +
                          "' has an empty replacement");
      if (!seen.insert(rule.pattern).second)
        throw ConfigError("normalization: ambiguous transliteration table, "
                          "pattern '" + utf8_encode(rule.pattern) +
                          "' appears more than once");
    }
  }

  // Keys: strip_set, sentence_delimiters, lowercase_fold, translit_file.
  // With a non-empty prefix (e.g. "norm.") keys are looked up prefixed.
  static NormalizationConfig from_kv(const KvConfig& kv,
                                     const std::string& prefix = "") {
    NormalizationConfig cfg;
    auto codepoint_set = [&](const std::string& key) {
      std::set<char32_t> out;
      std::string value = kv.get_string(prefix + key, std::string());
      std::vector<char32_t> cps;
      if (!utf8_decode(value, &cps))
        throw ConfigError(kv.source() + ": key '" + prefix + key +
                          "' is not valid UTF-8");
      out.insert(cps.begin(), cps.end());
      return out;
    };
    cfg.strip_set = codepoint_set("strip_set");
    cfg.sentence_delimiters = codepoint_set("sentence_delimiters");
    cfg.lowercase_fold = kv.get_bool(prefix + "lowercase_fold", false);
    if (kv.has(prefix + "translit_file"))
      cfg.transliteration =
          load_transliteration_table(kv.get_path(prefix + "translit_file"));
    cfg.validate();
    return cfg;
  }

  static NormalizationConfig from_file(const std::filesystem::path& path) {
    KvConfig kv = KvConfig::parse_file(path);
    kv.reject_unknown_keys({"strip_set", "sentence_delimiters",
                            "lowercase_fold", "translit_file"});
    return from_kv(kv);
  }

  // One rule per line: `pattern replacement-words...`, '#' comments.
  static std::vector<TransliterationRule> load_transliteration_table(
      const std::filesystem::path& path) {
    std::vector<TransliterationRule> rules;
    std::size_t lineno = 0;
    for (const std::string& raw : read_lines(path)) {
      ++lineno;
      std::string_view line = trim(raw);
      if (line.empty() || line.front() == '#') continue;
      std::vector<std::string> fields = split_whitespace(line);
      if (fields.size() < 2)
        throw ParseError(path.string(), lineno, 0,
                         "expected 'pattern replacement...'");
      TransliterationRule rule;
      if (!utf8_decode(fields[0], &rule.pattern))
        throw ParseError(path.string(), lineno, 0, "pattern is not valid UTF-8");
      rule.replacement.assign(fields.begin() + 1, fields.end());
      rules.push_back(std::move(rule));
    }
    return rules;
  }
};

enum class DocIssueKind { kEmptyDocument, kDecodeError };

struct DocIssue {
  std::string doc_id;
  DocIssueKind kind;
  std::string message;
};

struct NormalizeResult {
  std::vector<NormalizedSentence> sentences;
  std::vector<DocIssue> issues;
};

namespace detail {

inline bool match_at(const std::vector<char32_t>& text, std::size_t pos,
                     const std::vector<char32_t>& pattern) {
  if (pos + pattern.size() > text.size()) return false;
  for (std::size_t k = 0; k < pattern.size(); ++k)
    if (text[pos + k] != pattern[k]) return false;
  return true;
}

inline std::vector<char32_t> transliterate(
    const std::vector<char32_t>& text,
    const std::vector<TransliterationRule>& rules) {
  if (rules.empty()) return text;
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const TransliterationRule* hit = nullptr;
    for (const auto& rule : rules) {
      if (match_at(text, pos, rule.pattern)) {
        hit = &rule;
        break;
      }
    }
    if (hit) {
      std::string replacement = join(hit->replacement, " ");
      std::vector<char32_t> cps;
      utf8_decode(replacement, &cps);
      out.insert(out.end(), cps.begin(), cps.end());
      pos += hit->pattern.size();
    } else {
      out.push_back(text[pos]);
      ++pos;
    }
  }
  return out;
}

}  // namespace detail

// Normalizes one document into zero or more sentences; returns false (and
// fills *issue) on a decode failure. A document that normalizes to zero
// sentences is reported by normalize_corpus, not here.
inline bool normalize_document(const RawDocument& doc,
                               const NormalizationConfig& cfg,
                               std::vector<NormalizedSentence>* out,
                               DocIssue* issue) {
  out->clear();
  std::vector<char32_t> cps;
  std::size_t bad_offset = 0;
  if (!utf8_decode(doc.text, &cps, &bad_offset)) {
    *issue = {doc.id, DocIssueKind::kDecodeError,
              "invalid UTF-8 at byte " + std::to_string(bad_offset)};
    return false;
  }
  cps = detail::transliterate(cps, cfg.transliteration);
  if (cfg.lowercase_fold) {
    for (char32_t& c : cps)
      if (c >= U'A' && c <= U'Z') c = c - U'A' + U'a';
  }

  std::vector<std::string> segment_tokens;
  std::string token;
  std::size_t index = 0;
  auto flush_token = [&]() {
    if (!token.empty()) {
      segment_tokens.push_back(token);
      token.clear();
    }
  };
  auto flush_segment = [&]() {
    flush_token();
    if (!segment_tokens.empty()) {
      NormalizedSentence s;
      s.doc_id = doc.id;
      s.sentence_index = index;
      s.id = doc.id + ":" + std::to_string(index);
      s.source_tag = doc.source_tag;
      s.tokens = std::move(segment_tokens);
      out->push_back(std::move(s));
      segment_tokens.clear();
      ++index;
    }
  };
  for (char32_t c : cps) {
    if (cfg.strip_set.count(c)) continue;
    if (cfg.sentence_delimiters.count(c)) {
      flush_segment();
    } else if (c == U' ' || c == U'\t' || c == U'\n' || c == U'\r') {
      flush_token();
    } else {
      utf8_append(c, &token);
    }
  }
  flush_segment();
  return true;
}

inline NormalizeResult normalize_corpus(const std::vector<RawDocument>& docs,
                                        const NormalizationConfig& cfg) {
  cfg.validate();
  NormalizeResult result;
  for (const RawDocument& doc : docs) {
    std::vector<NormalizedSentence> sentences;
    DocIssue issue;
    if (!normalize_document(doc, cfg, &sentences, &issue)) {
      result.issues.push_back(std::move(issue));
      continue;
    }
    if (sentences.empty()) {
      result.issues.push_back({doc.id, DocIssueKind::kEmptyDocument,
                               "document yields zero sentences"});
      continue;
    }
    for (auto& s : sentences) result.sentences.push_back(std::move(s));
  }
  return result;
}

struct CorpusStats {
  std::size_t sentence_count = 0;
  std::size_t token_count = 0;
  std::size_t vocabulary_size = 0;
  std::map<std::string, std::size_t> sentences_per_source;
  std::map<std::string, std::size_t> tokens_per_source;
};

inline CorpusStats corpus_stats(const std::vector<NormalizedSentence>& sents) {
  CorpusStats stats;
  std::set<std::string> vocab;
  for (const auto& s : sents) {
    ++stats.sentence_count;
    stats.token_count += s.tokens.size();
    ++stats.sentences_per_source[s.source_tag];
    stats.tokens_per_source[s.source_tag] += s.tokens.size();
    vocab.insert(s.tokens.begin(), s.tokens.end());
  }
  stats.vocabulary_size = vocab.size();
  return stats;
}

// ---------------------------------------------------------------------------
// Document and sentence I/O
// ---------------------------------------------------------------------------

// One document per line, optionally `text<TAB>source_tag`.
inline std::vector<RawDocument> read_documents_per_line(
    const std::filesystem::path& path) {
  std::vector<RawDocument> docs;
  std::string stem = path.stem().string();
  std::size_t lineno = 0;
  for (const std::string& line : read_lines(path)) {
    ++lineno;
    RawDocument doc;
    doc.id = stem + ":" + std::to_string(lineno);
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      doc.text = line;
    } else {
      doc.text = line.substr(0, tab);
      doc.source_tag = std::string(trim(line.substr(tab + 1)));
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

inline RawDocument read_document_file(const std::filesystem::path& path,
                                      const std::string& source_tag = "") {
  return RawDocument{path.stem().string(), read_file_text(path), source_tag};
}

// One sentence per line, tokens space-separated.
inline std::string render_sentences(
    const std::vector<NormalizedSentence>& sents) {
  std::string out;
  for (const auto& s : sents) {
    out += s.text();
    out += '\n';
  }
  return out;
}

inline std::vector<std::vector<std::string>> read_token_lines(
    const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> out;
  for (const std::string& line : read_lines(path)) {
    std::vector<std::string> tokens = split_whitespace(line);
    if (!tokens.empty()) out.push_back(std::move(tokens));
  }
  return out;
}

}  // namespace ttskit

#endif  // TTSKIT_TEXTNORM_HPP_
