// tests/test_textnorm.cpp

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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_util.hpp"
#include "ttskit/textnorm.hpp"

using namespace ttskit;

namespace {

NormalizationConfig toy_config() {
  NormalizationConfig cfg;
  cfg.strip_set = {U'@', U'#'};
  cfg.sentence_delimiters = {U'.'};
  return cfg;
}

TransliterationRule rule(const std::string& pattern,
                         std::vector<std::string> replacement) {
  TransliterationRule r;
  REQUIRE(utf8_decode(pattern, &r.pattern));
  r.replacement = std::move(replacement);
  return r;
}

}  // namespace

TEST_CASE("strip set removal and delimiter split") {
  NormalizationConfig cfg = toy_config();
  NormalizeResult out =
      normalize_corpus({{"d1", "a@#b. c d.", ""}}, cfg);
  REQUIRE(out.sentences.size() == 2);
  CHECK(out.sentences[0].tokens == std::vector<std::string>{"ab"});
  CHECK(out.sentences[1].tokens == std::vector<std::string>{"c", "d"});
  CHECK(out.sentences[0].id == "d1:0");
  CHECK(out.sentences[1].sentence_index == 1);
  CHECK(out.issues.empty());
}

TEST_CASE("empty document is dropped and reported") {
  NormalizeResult out = normalize_corpus({{"d1", "", ""}}, toy_config());
  CHECK(out.sentences.empty());
  REQUIRE(out.issues.size() == 1);
  CHECK(out.issues[0].doc_id == "d1");
  CHECK(out.issues[0].kind == DocIssueKind::kEmptyDocument);
}

TEST_CASE("transliteration applies before tokenization") {
  NormalizationConfig cfg = toy_config();
  cfg.transliteration = {rule("5", {"five"})};
  NormalizeResult out = normalize_corpus({{"d1", "x  5  y.", ""}}, cfg);
  REQUIRE(out.sentences.size() == 1);
  CHECK(out.sentences[0].tokens ==
        std::vector<std::string>{"x", "five", "y"});
}

TEST_CASE("transliteration first match wins over priority order") {
  NormalizationConfig cfg = toy_config();
  cfg.transliteration = {rule("ab", {"first"}), rule("a", {"second"})};
  NormalizeResult out = normalize_corpus({{"d1", "ab a.", ""}}, cfg);
  REQUIRE(out.sentences.size() == 1);
  CHECK(out.sentences[0].tokens ==
        std::vector<std::string>{"first", "second"});
}

TEST_CASE("multi-word replacement expands to several tokens") {
  NormalizationConfig cfg = toy_config();
  cfg.transliteration = {rule("7", {"sa", "at"})};
  NormalizeResult out = normalize_corpus({{"d1", "k 7 m.", ""}}, cfg);
  REQUIRE(out.sentences.size() == 1);
  CHECK(out.sentences[0].tokens ==
        std::vector<std::string>{"k", "sa", "at", "m"});
}

TEST_CASE("duplicate transliteration pattern is a configuration error") {
  NormalizationConfig cfg = toy_config();
  cfg.transliteration = {rule("5", {"five"}), rule("5", {"fem"})};
  CHECK_THROWS_AS(normalize_corpus({{"d1", "x.", ""}}, cfg), ConfigError);
}

TEST_CASE("empty delimiter set is a configuration error") {
  NormalizationConfig cfg;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("undecodable document yields an error record, not an abort") {
  std::string bad = "ok so far.";
  bad.push_back(static_cast<char>(0xFF));
  NormalizeResult out = normalize_corpus(
      {{"bad", bad, ""}, {"good", "a b.", ""}}, toy_config());
  REQUIRE(out.issues.size() == 1);
  CHECK(out.issues[0].doc_id == "bad");
  CHECK(out.issues[0].kind == DocIssueKind::kDecodeError);
  REQUIRE(out.sentences.size() == 1);
  CHECK(out.sentences[0].doc_id == "good");
}

TEST_CASE("lowercase folding is ASCII-only and idempotent") {
  NormalizationConfig cfg = toy_config();
  cfg.lowercase_fold = true;
  NormalizeResult out = normalize_corpus({{"d1", "Ka MA.", ""}}, cfg);
  REQUIRE(out.sentences.size() == 1);
  CHECK(out.sentences[0].tokens == std::vector<std::string>{"ka", "ma"});
}

TEST_CASE("normalization is idempotent on its own output") {
  NormalizationConfig cfg = toy_config();
  cfg.transliteration = {rule("5", {"five"}), rule("&", {"et"})};
  cfg.lowercase_fold = true;
  std::mt19937 rng(20260810);
  const std::string alphabet = "abkmt @#.&5 XY";
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<std::size_t> len(0, 30);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string text;
    for (std::size_t i = 0, L = len(rng); i < L; ++i)
      text.push_back(alphabet[pick(rng)]);
    NormalizeResult once = normalize_corpus({{"d", text, ""}}, cfg);
    // Re-normalize the rendered output of the first pass.
    std::vector<RawDocument> docs;
    for (const auto& s : once.sentences)
      docs.push_back({s.id, s.text() + ".", ""});
    NormalizeResult twice = normalize_corpus(docs, cfg);
    REQUIRE(twice.sentences.size() == once.sentences.size());
    for (std::size_t i = 0; i < once.sentences.size(); ++i)
      CHECK(twice.sentences[i].tokens == once.sentences[i].tokens);
  }
}

TEST_CASE("no output token contains strip or delimiter characters") {
  NormalizationConfig cfg = toy_config();
  std::mt19937 rng(7);
  const std::string alphabet = "ab @#.";
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<std::size_t> len(0, 40);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string text;
    std::size_t segments_with_tokens = 0;
    for (std::size_t i = 0, L = len(rng); i < L; ++i)
      text.push_back(alphabet[pick(rng)]);
    NormalizeResult out = normalize_corpus({{"d", text, ""}}, cfg);
    for (const auto& s : out.sentences)
      for (const auto& tok : s.tokens) {
        CHECK(tok.find('@') == std::string::npos);
        CHECK(tok.find('#') == std::string::npos);
        CHECK(tok.find('.') == std::string::npos);
        CHECK_FALSE(tok.empty());
      }
    // Sentence count equals the number of non-empty delimiter-separated
    // segments (a segment is non-empty when it still has a token after
    // stripping).
    for (const std::string& segment : split_on(text, '.')) {
      std::string cleaned;
      for (char c : segment)
        if (c != '@' && c != '#') cleaned.push_back(c);
      if (!split_whitespace(cleaned).empty()) ++segments_with_tokens;
    }
    CHECK(out.sentences.size() == segments_with_tokens);
  }
}

TEST_CASE("corpus stats") {
  CorpusStats empty = corpus_stats({});
  CHECK(empty.sentence_count == 0);
  CHECK(empty.token_count == 0);
  CHECK(empty.vocabulary_size == 0);

  std::vector<NormalizedSentence> sents(2);
  sents[0].tokens = {"a", "b"};
  sents[0].source_tag = "s1";
  sents[1].tokens = {"a"};
  sents[1].source_tag = "s2";
  CorpusStats stats = corpus_stats(sents);
  CHECK(stats.sentence_count == 2);
  CHECK(stats.token_count == 3);
  CHECK(stats.vocabulary_size == 2);
  CHECK(stats.sentences_per_source["s1"] == 1);
  CHECK(stats.tokens_per_source["s1"] == 2);
}

TEST_CASE("corpus stats agree with an independent line/word count") {
  testutil::TempDir tmp("norm");
  NormalizationConfig cfg = toy_config();
  std::vector<RawDocument> docs = {
      {"d1", "ka ma. ti ra@.", "health"},
      {"d2", "mi# na.", "science"},
  };
  NormalizeResult out = normalize_corpus(docs, cfg);
  std::filesystem::path rendered =
      tmp.write("sents.txt", render_sentences(out.sentences));
  // Independent oracle: count lines and whitespace words of the output file.
  std::size_t lines = 0, words = 0;
  for (const std::string& line : read_lines(rendered)) {
    ++lines;
    words += split_whitespace(line).size();
  }
  CorpusStats stats = corpus_stats(out.sentences);
  CHECK(stats.sentence_count == lines);
  CHECK(stats.token_count == words);
}

TEST_CASE("per-line document reader handles source tags") {
  testutil::TempDir tmp("docs");
  std::filesystem::path p =
      tmp.write("docs.txt", "ka ma.\thealth\nplain text no tag.\n");
  std::vector<RawDocument> docs = read_documents_per_line(p);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].id == "docs:1");
  CHECK(docs[0].source_tag == "health");
  CHECK(docs[0].text == "ka ma.");
  CHECK(docs[1].source_tag.empty());
}
