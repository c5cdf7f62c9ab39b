// ttskit/context_stats.hpp
//
// Sufficient statistics for tied-state clustering, accumulated from
// phone-aligned feature frames. Alignments arrive as input files; nothing
// here performs alignment.

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

#ifndef TTSKIT_CONTEXT_STATS_HPP_
#define TTSKIT_CONTEXT_STATS_HPP_

#include <map>
#include <string>
#include <vector>

#include "ttskit/common.hpp"
#include "ttskit/labels.hpp"
#include "ttskit/phoneset.hpp"

namespace ttskit {

// First and second moment sums with an occupancy (frame or occurrence count).
// Additive: stats of a pool equal the sum of member stats.
struct ContextStats {
  double occupancy = 0.0;
  std::vector<double> sum;
  std::vector<double> sum_sq;

  std::size_t dim() const { return sum.size(); }

  void add_value(const std::vector<double>& v, double weight = 1.0) {
    if (sum.empty()) {
      sum.assign(v.size(), 0.0);
      sum_sq.assign(v.size(), 0.0);
    }
    if (v.size() != sum.size())
      throw DataError("stats: dimension mismatch, expected " +
                      std::to_string(sum.size()) + " got " +
                      std::to_string(v.size()));
    occupancy += weight;
    for (std::size_t k = 0; k < v.size(); ++k) {
      sum[k] += weight * v[k];
      sum_sq[k] += weight * v[k] * v[k];
    }
  }

  void merge(const ContextStats& other) {
    if (other.occupancy == 0.0) return;
    if (sum.empty()) {
      sum.assign(other.dim(), 0.0);
      sum_sq.assign(other.dim(), 0.0);
    }
    if (other.dim() != dim())
      throw DataError("stats: dimension mismatch in merge");
    occupancy += other.occupancy;
    for (std::size_t k = 0; k < sum.size(); ++k) {
      sum[k] += other.sum[k];
      sum_sq[k] += other.sum_sq[k];
    }
  }

  std::vector<double> mean() const {
    std::vector<double> m(sum.size());
    for (std::size_t k = 0; k < sum.size(); ++k) m[k] = sum[k] / occupancy;
    return m;
  }

  // Population variance per dimension, clamped at zero; no floor here.
  std::vector<double> variance() const {
    std::vector<double> v(sum.size());
    for (std::size_t k = 0; k < sum.size(); ++k) {
      double m = sum[k] / occupancy;
      v[k] = std::max(sum_sq[k] / occupancy - m * m, 0.0);
    }
    return v;
  }
};

struct AlignedPhone {
  FullContextLabel label;
  std::vector<std::vector<double>> frames;  // frames x dim
};

struct AlignedUtterance {
  std::string id;
  std::vector<AlignedPhone> phones;
};

struct LabeledStats {
  FullContextLabel label;
  ContextStats stats;
};

// Keyed by label text so iteration order is reproducible.
using StatsMap = std::map<std::string, LabeledStats>;

// Acoustic stream: occupancy counts frames, moments sum feature values.
inline StatsMap accumulate_stats(const std::vector<AlignedUtterance>& utts) {
  StatsMap out;
  std::size_t dim = 0;
  for (const auto& utt : utts) {
    for (const auto& phone : utt.phones) {
      for (const auto& frame : phone.frames) {
        if (dim == 0) dim = frame.size();
        if (frame.size() != dim)
          throw DataError("alignment '" + utt.id +
                          "': frame dimension mismatch");
        auto& entry = out[phone.label.to_string()];
        entry.label = phone.label;
        entry.stats.add_value(frame);
      }
    }
  }
  return out;
}

// Duration stream: one observation per phone occurrence, value = frame count.
inline StatsMap accumulate_duration_stats(
    const std::vector<AlignedUtterance>& utts) {
  StatsMap out;
  for (const auto& utt : utts) {
    for (const auto& phone : utt.phones) {
      auto& entry = out[phone.label.to_string()];
      entry.label = phone.label;
      entry.stats.add_value({static_cast<double>(phone.frames.size())});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Alignment file:
//   dim <d>
//   utt <id>
//   <label> <nframes> <v11> ... <v1d> <v21> ...
// ---------------------------------------------------------------------------

inline std::vector<AlignedUtterance> parse_alignment_file(
    const std::filesystem::path& path, const PhoneSet* phoneset = nullptr) {
  std::vector<AlignedUtterance> utts;
  std::size_t dim = 0;
  std::size_t lineno = 0;
  const std::string where = path.string();
  for (const std::string& raw : read_lines(path)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> f = split_whitespace(line);
    if (f[0] == "dim") {
      if (f.size() != 2)
        throw ParseError(where, lineno, 0, "expected 'dim <d>'");
      dim = static_cast<std::size_t>(parse_long(f[1], where, lineno));
      if (dim == 0) throw ParseError(where, lineno, 0, "dim must be positive");
      continue;
    }
    if (dim == 0)
      throw ParseError(where, lineno, 0, "missing 'dim' header line");
    if (f[0] == "utt") {
      if (f.size() != 2)
        throw ParseError(where, lineno, 0, "expected 'utt <id>'");
      utts.push_back({f[1], {}});
      continue;
    }
    if (utts.empty())
      throw ParseError(where, lineno, 0, "phone line before any 'utt'");
    if (f.size() < 2)
      throw ParseError(where, lineno, 0, "expected '<label> <nframes> ...'");
    AlignedPhone phone;
    phone.label = parse_label(f[0], where, lineno, phoneset);
    long nframes = parse_long(f[1], where, lineno);
    if (nframes < 1)
      throw ParseError(where, lineno, 0, "phone must span at least one frame");
    std::size_t expected = static_cast<std::size_t>(nframes) * dim;
    if (f.size() != 2 + expected)
      throw ParseError(where, lineno, 0,
                       "dimension mismatch: expected " +
                       std::to_string(expected) + " values, got " +
                       std::to_string(f.size() - 2));
    for (long t = 0; t < nframes; ++t) {
      std::vector<double> frame(dim);
      for (std::size_t k = 0; k < dim; ++k)
        frame[k] = parse_double(f[2 + t * dim + k], where, lineno);
      phone.frames.push_back(std::move(frame));
    }
    phone.label.phone_index = utts.back().phones.size();
    utts.back().phones.push_back(std::move(phone));
  }
  return utts;
}

inline std::string render_alignment_file(
    const std::vector<AlignedUtterance>& utts, std::size_t dim) {
  std::string out = "dim " + std::to_string(dim) + "\n";
  for (const auto& utt : utts) {
    out += "utt " + utt.id + "\n";
    for (const auto& phone : utt.phones) {
      out += phone.label.to_string() + " " +
             std::to_string(phone.frames.size());
      for (const auto& frame : phone.frames)
        for (double v : frame) out += " " + format_double(v);
      out += '\n';
    }
  }
  return out;
}

}  // namespace ttskit

#endif  // TTSKIT_CONTEXT_STATS_HPP_
