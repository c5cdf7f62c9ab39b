// tests/test_phone.cpp

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
#include "ttskit/g2p.hpp"
#include "ttskit/labels.hpp"
#include "ttskit/phoneset.hpp"
#include "ttskit/questions.hpp"

using namespace ttskit;

namespace {

PhoneSet toy_phoneset() {
  PhoneSet ps;
  ps.phones = {"sil", "a", "i", "u", "k", "m", "t", "x"};
  ps.silence_symbol = "sil";
  ps.categories["Vowel"] = {"a", "i", "u"};
  ps.categories["Nasal"] = {"m"};
  ps.validate();
  return ps;
}

G2PRules make_rules(std::vector<std::pair<std::string,
                                          std::vector<std::string>>> defs,
                    bool longest = true) {
  G2PRules rules;
  rules.longest_match_first = longest;
  for (auto& [pattern, phones] : defs) {
    G2PRule r;
    REQUIRE(utf8_decode(pattern, &r.pattern));
    r.phones = std::move(phones);
    rules.rules.push_back(std::move(r));
  }
  return rules;
}

}  // namespace

// ---------------------------------------------------------------------------
// G2P
// ---------------------------------------------------------------------------

TEST_CASE("direct rule application") {
  G2PRules rules = make_rules({{"ka", {"k", "a"}}, {"m", {"m"}}});
  CHECK(g2p("kam", rules) == std::vector<std::string>{"k", "a", "m"});
  CHECK(g2p("", rules).empty());
}

TEST_CASE("ambiguous overlap resolves by longest match with backtracking") {
  G2PRules rules = make_rules(
      {{"k", {"k"}}, {"ka", {"k", "a"}}, {"am", {"a", "m"}}});
  // Greedy 'ka' leaves an uncoverable 'm'; the parse backtracks to k + am.
  CHECK(g2p("kam", rules) == std::vector<std::string>{"k", "a", "m"});
}

TEST_CASE("longest match wins when both parses complete") {
  G2PRules rules = make_rules(
      {{"k", {"k"}}, {"ka", {"K", "A"}}, {"a", {"a"}}, {"m", {"m"}}});
  CHECK(g2p("kam", rules) == std::vector<std::string>{"K", "A", "m"});
  // Rule-order priority instead of longest when the flag is off.
  rules.longest_match_first = false;
  CHECK(g2p("kam", rules) == std::vector<std::string>{"k", "a", "m"});
}

TEST_CASE("uncovered grapheme names the grapheme") {
  G2PRules rules = make_rules({{"k", {"k"}}});
  try {
    g2p("kz", rules);
    FAIL("expected a g2p error");
  } catch (const G2PError& e) {
    CHECK(std::string(e.what()).find("'z'") != std::string::npos);
  }
}

TEST_CASE("g2p rule file round trip and validation") {
  testutil::TempDir tmp("g2p");
  PhoneSet ps = toy_phoneset();
  std::filesystem::path p = tmp.write("rules.tsv",
                                      "# toy rules\n"
                                      "ka k a\n"
                                      "m m\n"
                                      "t t\n");
  G2PRules rules = G2PRules::parse_file(p, &ps);
  CHECK(rules.rules.size() == 3);
  CHECK(rules.longest_match_first);
  CHECK(g2p("kamt", rules) == std::vector<std::string>{"k", "a", "m", "t"});

  std::filesystem::path bad = tmp.write("bad.tsv", "q zz\n");
  CHECK_THROWS_AS(G2PRules::parse_file(bad, &ps), ParseError);

  std::filesystem::path first = tmp.write("first.tsv",
                                          "match first\n"
                                          "k k\n"
                                          "ka k a\n");
  CHECK_FALSE(G2PRules::parse_file(first, &ps).longest_match_first);
}

// ---------------------------------------------------------------------------
// Context expansion
// ---------------------------------------------------------------------------

TEST_CASE("pentaphone expansion pads boundaries with silence") {
  PhoneSet ps = toy_phoneset();
  std::vector<FullContextLabel> labels = expand_contexts({"k", "a", "m"}, ps);
  REQUIRE(labels.size() == 3);
  CHECK(labels[0].to_string() == "sil^sil-k+a=m");
  CHECK(labels[1].to_string() == "sil^k-a+m=sil");
  CHECK(labels[2].to_string() == "k^a-m+sil=sil");
  CHECK(labels[1].phone_index == 1);

  std::vector<FullContextLabel> single = expand_contexts({"x"}, ps);
  REQUIRE(single.size() == 1);
  CHECK(single[0].to_string() == "sil^sil-x+sil=sil");
}

TEST_CASE("expansion edge cases and center identity") {
  PhoneSet ps = toy_phoneset();
  CHECK_THROWS_AS(expand_contexts({}, ps), DataError);
  CHECK_THROWS_AS(expand_contexts({"nope"}, ps), DataError);

  std::mt19937 rng(5);
  std::vector<std::string> inventory(ps.phones.begin(), ps.phones.end());
  std::uniform_int_distribution<std::size_t> len(1, 12);
  std::uniform_int_distribution<std::size_t> pick(0, inventory.size() - 1);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<std::string> phones;
    for (std::size_t i = 0, L = len(rng); i < L; ++i)
      phones.push_back(inventory[pick(rng)]);
    std::vector<FullContextLabel> labels = expand_contexts(phones, ps);
    REQUIRE(labels.size() == phones.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
      CHECK(labels[i].c == phones[i]);
    // Out-of-range slots are silence, exactly at the boundaries.
    CHECK(labels.front().ll == ps.silence_symbol);
    CHECK(labels.front().l == ps.silence_symbol);
    CHECK(labels.back().r == ps.silence_symbol);
    CHECK(labels.back().rr == ps.silence_symbol);
  }
}

// ---------------------------------------------------------------------------
// Label files
// ---------------------------------------------------------------------------

TEST_CASE("label grammar parses and serializes") {
  PhoneSet ps = toy_phoneset();
  FullContextLabel label = parse_label("sil^k-a+m=sil", "<mem>", 1, &ps);
  CHECK(label.ll == "sil");
  CHECK(label.l == "k");
  CHECK(label.c == "a");
  CHECK(label.r == "m");
  CHECK(label.rr == "sil");
}

TEST_CASE("label file round trip is byte identical") {
  testutil::TempDir tmp("labels");
  PhoneSet ps = toy_phoneset();
  std::vector<std::string> inventory(ps.phones.begin(), ps.phones.end());
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, inventory.size() - 1);
  std::vector<FullContextLabel> labels;
  for (int i = 0; i < 100; ++i) {
    FullContextLabel l;
    l.ll = inventory[pick(rng)];
    l.l = inventory[pick(rng)];
    l.c = inventory[pick(rng)];
    l.r = inventory[pick(rng)];
    l.rr = inventory[pick(rng)];
    l.phone_index = static_cast<std::size_t>(i);
    labels.push_back(l);
  }
  std::string rendered = render_label_file(labels);
  std::filesystem::path p = tmp.file("r.lab");
  write_label_file(labels, p);
  std::vector<FullContextLabel> back = parse_label_file(p, &ps);
  CHECK(render_label_file(back) == rendered);
  CHECK(read_file_text(p) == rendered);
}

TEST_CASE("malformed labels raise structured errors with position") {
  PhoneSet ps = toy_phoneset();
  for (const std::string& bad :
       {"sil^k-a+m", "^k-a+m=sil", "silk-a+m=sil", "sil^k-a+m=sil=x",
        "a^b", "", "sil^k-a+=sil"}) {
    CHECK_THROWS_AS(parse_label(bad, "<mem>", 3, nullptr), ParseError);
  }
  // Unknown phone with a phoneset attached.
  CHECK_THROWS_AS(parse_label("sil^k-q+m=sil", "<mem>", 1, &ps), ParseError);
}

TEST_CASE("label parser survives fuzzed garbage") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> chr(32, 126);
  std::uniform_int_distribution<std::size_t> len(0, 24);
  for (int iter = 0; iter < 2000; ++iter) {
    std::string line;
    for (std::size_t i = 0, L = len(rng); i < L; ++i)
      line.push_back(static_cast<char>(chr(rng)));
    try {
      parse_label(line, "<fuzz>", 1, nullptr);
    } catch (const ParseError&) {
      // structured failure is the contract; crashes are not
    }
  }
}

// ---------------------------------------------------------------------------
// Question files
// ---------------------------------------------------------------------------

TEST_CASE("question pattern grammar fixes one slot per pattern") {
  Question q = parse_question_line("QS \"R-Nasal\" {*+m=*,*+n=*}", "<mem>", 1);
  CHECK(q.name == "R-Nasal");
  CHECK(q.slot == ContextSlot::kR);
  CHECK(q.phones == std::set<std::string>{"m", "n"});

  Question c = parse_question_line("QS \"C-a\" {*-a+*}", "<mem>", 1);
  CHECK(c.slot == ContextSlot::kC);
  Question ll = parse_question_line("QS \"LL-sil\" {sil^*}", "<mem>", 1);
  CHECK(ll.slot == ContextSlot::kLL);
  Question l = parse_question_line("QS \"L-k\" {*^k-*}", "<mem>", 1);
  CHECK(l.slot == ContextSlot::kL);
  Question rr = parse_question_line("QS \"RR-sil\" {*=sil}", "<mem>", 1);
  CHECK(rr.slot == ContextSlot::kRR);

  FullContextLabel label = parse_label("sil^k-a+m=sil", "<mem>", 1);
  CHECK(q.matches(label));
  CHECK(c.matches(label));
  CHECK(ll.matches(label));
  CHECK(l.matches(label));
  CHECK(rr.matches(label));
  FullContextLabel other = parse_label("k^a-m+sil=sil", "<mem>", 1);
  CHECK_FALSE(q.matches(other));
}

TEST_CASE("mixed-slot and malformed questions are rejected") {
  CHECK_THROWS_AS(parse_question_line("QS \"bad\" {*+m=*,*-a+*}", "<mem>", 1),
                  ParseError);
  CHECK_THROWS_AS(parse_question_line("QS \"bad\" {}", "<mem>", 1),
                  ParseError);
  CHECK_THROWS_AS(parse_question_line("QS bad {*+m=*}", "<mem>", 1),
                  ParseError);
  CHECK_THROWS_AS(parse_question_line("QS \"bad\" {*+m=*,*+m=*}", "<mem>", 1),
                  ParseError);
  CHECK_THROWS_AS(parse_question_line("QQ \"bad\" {*+m=*}", "<mem>", 1),
                  ParseError);
  CHECK_THROWS_AS(parse_question_line("QS \"bad\" {*m*}", "<mem>", 1),
                  ParseError);
}

TEST_CASE("question file round trip is byte identical") {
  testutil::TempDir tmp("qs");
  PhoneSet ps = toy_phoneset();
  std::string text =
      "QS \"C-Vowel\" {*-a+*,*-i+*,*-u+*}\n"
      "QS \"R-Nasal\" {*+m=*}\n"
      "QS \"L-Silence\" {*^sil-*}\n"
      "QS \"LL-Silence\" {sil^*}\n"
      "QS \"RR-Silence\" {*=sil}\n";
  std::filesystem::path p = tmp.write("toy.qs", text);
  QuestionSet qs = parse_question_file(p, &ps);
  REQUIRE(qs.questions.size() == 5);
  CHECK(render_question_file(qs) == text);

  std::filesystem::path dup = tmp.write(
      "dup.qs", "QS \"X\" {*-a+*}\nQS \"X\" {*-i+*}\n");
  CHECK_THROWS_AS(parse_question_file(dup, &ps), ParseError);
  std::filesystem::path unknown =
      tmp.write("unk.qs", "QS \"X\" {*-zz+*}\n");
  CHECK_THROWS_AS(parse_question_file(unknown, &ps), ParseError);
}

TEST_CASE("question parser survives fuzzed garbage") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> chr(32, 126);
  std::uniform_int_distribution<std::size_t> len(0, 32);
  for (int iter = 0; iter < 2000; ++iter) {
    std::string line = "QS ";
    for (std::size_t i = 0, L = len(rng); i < L; ++i)
      line.push_back(static_cast<char>(chr(rng)));
    try {
      parse_question_line(line, "<fuzz>", 1);
    } catch (const ParseError&) {
    }
  }
}

// ---------------------------------------------------------------------------
// Phone set files
// ---------------------------------------------------------------------------

TEST_CASE("phoneset file parsing and validation") {
  testutil::TempDir tmp("ps");
  std::filesystem::path good = tmp.write("p.txt",
                                         "silence sil\n"
                                         "phones sil a k m\n"
                                         "category Vowel a\n");
  PhoneSet ps = PhoneSet::parse_file(good);
  CHECK(ps.contains("a"));
  CHECK(ps.silence_symbol == "sil");
  CHECK(ps.categories.at("Vowel").count("a") == 1);

  std::filesystem::path no_sil =
      tmp.write("nosil.txt", "phones a b\nsilence q\n");
  CHECK_THROWS_AS(PhoneSet::parse_file(no_sil), ConfigError);
  std::filesystem::path bad_cat = tmp.write(
      "badcat.txt", "silence sil\nphones sil a\ncategory V zz\n");
  CHECK_THROWS_AS(PhoneSet::parse_file(bad_cat), ConfigError);
  std::filesystem::path bad_sym = tmp.write(
      "badsym.txt", "silence sil\nphones sil a+b\n");
  CHECK_THROWS_AS(PhoneSet::parse_file(bad_sym), ConfigError);
}
