// ttskit/questions.hpp
//
// Phonetic yes-no question sets. Question files hold one question per line:
//
//   QS "R-Nasal" {*+m=*,*+n=*}
//
// Each pattern constrains exactly one context slot through the label
// delimiter syntax: `X^*` (LL), `*^X-*` (L), `*-X+*` (C), `*+X=*` (R),
// `*=X` (RR). All patterns of one question must address the same slot.

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

#ifndef TTSKIT_QUESTIONS_HPP_
#define TTSKIT_QUESTIONS_HPP_

#include <set>
#include <string>
#include <vector>

#include "ttskit/common.hpp"
#include "ttskit/labels.hpp"
#include "ttskit/phoneset.hpp"

namespace ttskit {

struct Question {
  std::string name;
  ContextSlot slot = ContextSlot::kC;
  std::vector<std::string> phone_list;  // file order, duplicate-free
  std::set<std::string> phones;

  bool matches(const FullContextLabel& label) const {
    return phones.count(label.slot(slot)) > 0;
  }
};

inline Question make_question(std::string name, ContextSlot slot,
                              std::vector<std::string> phone_list) {
  Question q;
  q.name = std::move(name);
  q.slot = slot;
  q.phone_list = std::move(phone_list);
  q.phones.insert(q.phone_list.begin(), q.phone_list.end());
  return q;
}

struct QuestionSet {
  std::vector<Question> questions;
};

namespace detail {

inline std::pair<ContextSlot, std::string> parse_question_pattern(
    std::string_view pat, const std::string& where, std::size_t lineno) {
  auto inner_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c == '*' || c == '^' || c == '-' || c == '+' || c == '=' ||
          std::isspace(static_cast<unsigned char>(c)))
        return false;
    return true;
  };
  auto fail = [&]() -> std::pair<ContextSlot, std::string> {
    throw ParseError(where, lineno, 0,
                     "malformed question pattern '" + std::string(pat) + "'");
  };
  if (pat.size() >= 3 && pat.substr(0, 2) == "*^" &&
      pat.substr(pat.size() - 2) == "-*") {
    std::string_view inner = pat.substr(2, pat.size() - 4);
    if (!inner_ok(inner)) return fail();
    return {ContextSlot::kL, std::string(inner)};
  }
  if (pat.size() >= 3 && pat.substr(0, 2) == "*-" &&
      pat.substr(pat.size() - 2) == "+*") {
    std::string_view inner = pat.substr(2, pat.size() - 4);
    if (!inner_ok(inner)) return fail();
    return {ContextSlot::kC, std::string(inner)};
  }
  if (pat.size() >= 3 && pat.substr(0, 2) == "*+" &&
      pat.substr(pat.size() - 2) == "=*") {
    std::string_view inner = pat.substr(2, pat.size() - 4);
    if (!inner_ok(inner)) return fail();
    return {ContextSlot::kR, std::string(inner)};
  }
  if (pat.size() >= 2 && pat.substr(0, 2) == "*=") {
    std::string_view inner = pat.substr(2);
    if (!inner_ok(inner)) return fail();
    return {ContextSlot::kRR, std::string(inner)};
  }
  if (pat.size() >= 2 && pat.substr(pat.size() - 2) == "^*") {
    std::string_view inner = pat.substr(0, pat.size() - 2);
    if (!inner_ok(inner)) return fail();
    return {ContextSlot::kLL, std::string(inner)};
  }
  return fail();
}

inline std::string render_question_pattern(ContextSlot slot,
                                           const std::string& phone) {
  switch (slot) {
    case ContextSlot::kLL: return phone + "^*";
    case ContextSlot::kL: return "*^" + phone + "-*";
    case ContextSlot::kC: return "*-" + phone + "+*";
    case ContextSlot::kR: return "*+" + phone + "=*";
    case ContextSlot::kRR: return "*=" + phone;
  }
  return phone;
}

}  // namespace detail

inline Question parse_question_line(std::string_view line,
                                    const std::string& where,
                                    std::size_t lineno,
                                    const PhoneSet* phoneset = nullptr) {
  if (line.substr(0, 3) != "QS ")
    throw ParseError(where, lineno, 1, "expected 'QS' directive");
  std::size_t q1 = line.find('"', 3);
  std::size_t q2 = q1 == std::string_view::npos ? std::string_view::npos
                                                : line.find('"', q1 + 1);
  if (q1 == std::string_view::npos || q2 == std::string_view::npos)
    throw ParseError(where, lineno, 4, "expected quoted question name");
  std::string name(line.substr(q1 + 1, q2 - q1 - 1));
  if (name.empty())
    throw ParseError(where, lineno, q1 + 1, "empty question name");
  std::string_view rest = trim(line.substr(q2 + 1));
  if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
    throw ParseError(where, lineno, q2 + 2, "expected '{patterns}'");
  std::vector<std::string> pats = split_on(rest.substr(1, rest.size() - 2), ',');
  Question q;
  q.name = std::move(name);
  bool first = true;
  for (const std::string& pat : pats) {
    auto [slot, phone] =
        detail::parse_question_pattern(trim(pat), where, lineno);
    if (first) {
      q.slot = slot;
      first = false;
    } else if (slot != q.slot) {
      throw ParseError(where, lineno, 0,
                       "question '" + q.name +
                       "' mixes context slots; one slot per question");
    }
    if (!q.phones.insert(phone).second)
      throw ParseError(where, lineno, 0,
                       "question '" + q.name + "' repeats phone '" + phone +
                       "'");
    if (phoneset && !phoneset->contains(phone))
      throw ParseError(where, lineno, 0,
                       "question '" + q.name + "' references unknown phone '" +
                       phone + "'");
    q.phone_list.push_back(phone);
  }
  if (q.phone_list.empty())
    throw ParseError(where, lineno, 0, "question '" + q.name + "' is empty");
  return q;
}

inline QuestionSet parse_question_file(const std::filesystem::path& path,
                                       const PhoneSet* phoneset = nullptr) {
  QuestionSet qs;
  std::set<std::string> names;
  std::size_t lineno = 0;
  for (const std::string& raw : read_lines(path)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    Question q = parse_question_line(line, path.string(), lineno, phoneset);
    if (!names.insert(q.name).second)
      throw ParseError(path.string(), lineno, 0,
                       "duplicate question name '" + q.name + "'");
    qs.questions.push_back(std::move(q));
  }
  return qs;
}

inline std::string render_question_file(const QuestionSet& qs) {
  std::string out;
  for (const Question& q : qs.questions) {
    out += "QS \"" + q.name + "\" {";
    for (std::size_t i = 0; i < q.phone_list.size(); ++i) {
      if (i) out += ',';
      out += detail::render_question_pattern(q.slot, q.phone_list[i]);
    }
    out += "}\n";
  }
  return out;
}

inline void write_question_file(const QuestionSet& qs,
                                const std::filesystem::path& path) {
  write_file_atomic(path, render_question_file(qs));
}

}  // namespace ttskit

#endif  // TTSKIT_QUESTIONS_HPP_
