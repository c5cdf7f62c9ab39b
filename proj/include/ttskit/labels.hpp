// ttskit/labels.hpp
//
// Pentaphone full-context labels. Text form is `LL^L-C+R=RR`, one label per
// line; utterance-boundary slots are padded with the silence phone.

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

#ifndef TTSKIT_LABELS_HPP_
#define TTSKIT_LABELS_HPP_

#include <array>
#include <string>
#include <vector>

#include "ttskit/common.hpp"
#include "ttskit/phoneset.hpp"

namespace ttskit {

enum class ContextSlot { kLL, kL, kC, kR, kRR };

inline const char* slot_name(ContextSlot slot) {
  switch (slot) {
    case ContextSlot::kLL: return "LL";
    case ContextSlot::kL: return "L";
    case ContextSlot::kC: return "C";
    case ContextSlot::kR: return "R";
    case ContextSlot::kRR: return "RR";
  }
  return "?";
}

struct FullContextLabel {
  std::string ll, l, c, r, rr;
  std::size_t phone_index = 0;  // position of the center phone in the utterance

  const std::string& slot(ContextSlot s) const {
    switch (s) {
      case ContextSlot::kLL: return ll;
      case ContextSlot::kL: return l;
      case ContextSlot::kC: return c;
      case ContextSlot::kR: return r;
      case ContextSlot::kRR: return rr;
    }
    return c;
  }

  std::string to_string() const {
    return ll + "^" + l + "-" + c + "+" + r + "=" + rr;
  }

  friend bool operator==(const FullContextLabel& a, const FullContextLabel& b) {
    return a.ll == b.ll && a.l == b.l && a.c == b.c && a.r == b.r &&
           a.rr == b.rr;
  }
};

// One label per phone; slots outside the sequence are the silence phone.
inline std::vector<FullContextLabel> expand_contexts(
    const std::vector<std::string>& phones, const PhoneSet& phoneset) {
  if (phones.empty())
    throw DataError("expand_contexts: empty phone sequence");
  for (const auto& p : phones)
    if (!phoneset.contains(p))
      throw DataError("expand_contexts: unknown phone '" + p + "'");
  const std::string& sil = phoneset.silence_symbol;
  auto at = [&](std::ptrdiff_t i) -> const std::string& {
    if (i < 0 || i >= static_cast<std::ptrdiff_t>(phones.size())) return sil;
    return phones[static_cast<std::size_t>(i)];
  };
  std::vector<FullContextLabel> labels;
  labels.reserve(phones.size());
  for (std::size_t i = 0; i < phones.size(); ++i) {
    std::ptrdiff_t s = static_cast<std::ptrdiff_t>(i);
    labels.push_back({at(s - 2), at(s - 1), at(s), at(s + 1), at(s + 2), i});
  }
  return labels;
}

inline FullContextLabel parse_label(std::string_view text,
                                    const std::string& where,
                                    std::size_t lineno,
                                    const PhoneSet* phoneset = nullptr) {
  static constexpr std::array<char, 4> kSeps = {'^', '-', '+', '='};
  FullContextLabel label;
  std::array<std::string*, 5> slots = {&label.ll, &label.l, &label.c, &label.r,
                                       &label.rr};
  std::size_t begin = 0;
  for (std::size_t s = 0; s < 4; ++s) {
    std::size_t pos = text.find(kSeps[s], begin);
    if (pos == std::string_view::npos)
      throw ParseError(where, lineno, begin + 1,
                       std::string("expected '") + kSeps[s] + "' delimiter");
    if (pos == begin)
      throw ParseError(where, lineno, begin + 1, "empty context slot");
    *slots[s] = std::string(text.substr(begin, pos - begin));
    begin = pos + 1;
  }
  if (begin >= text.size())
    throw ParseError(where, lineno, begin + 1, "empty context slot");
  *slots[4] = std::string(text.substr(begin));
  for (std::size_t s = 0; s < 5; ++s) {
    for (char sep : kSeps)
      if (slots[s]->find(sep) != std::string::npos)
        throw ParseError(where, lineno, 0,
                         std::string("unexpected '") + sep + "' in slot " +
                         slot_name(static_cast<ContextSlot>(s)));
  }
  if (phoneset) {
    for (std::size_t s = 0; s < 5; ++s) {
      if (!phoneset->contains(*slots[s]))
        throw ParseError(where, lineno, 0,
                         "unknown phone '" + *slots[s] + "' in slot " +
                         slot_name(static_cast<ContextSlot>(s)));
    }
  }
  return label;
}

inline std::vector<FullContextLabel> parse_label_file(
    const std::filesystem::path& path, const PhoneSet* phoneset = nullptr) {
  std::vector<FullContextLabel> labels;
  std::size_t lineno = 0;
  for (const std::string& raw : read_lines(path)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty())
      throw ParseError(path.string(), lineno, 1, "blank label line");
    FullContextLabel label = parse_label(line, path.string(), lineno, phoneset);
    label.phone_index = labels.size();
    labels.push_back(std::move(label));
  }
  return labels;
}

inline std::string render_label_file(
    const std::vector<FullContextLabel>& labels) {
  std::string out;
  for (const auto& label : labels) {
    out += label.to_string();
    out += '\n';
  }
  return out;
}

inline void write_label_file(const std::vector<FullContextLabel>& labels,
                             const std::filesystem::path& path) {
  write_file_atomic(path, render_label_file(labels));
}

}  // namespace ttskit

#endif  // TTSKIT_LABELS_HPP_
