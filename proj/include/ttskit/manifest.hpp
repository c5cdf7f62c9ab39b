// ttskit/manifest.hpp
//
// Staged corpus manifests consumed by external neural trainers. Delimited
// text, one record per line:
//
//   #ttskit-manifest 1
//   #meta key=value
//   id|stage|source|text|label_path|feature_path
//
// Paths are stored relative to the manifest's directory so two runs into
// sibling output roots produce byte-identical files.

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

#ifndef TTSKIT_MANIFEST_HPP_
#define TTSKIT_MANIFEST_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "ttskit/acoustic_model.hpp"
#include "ttskit/common.hpp"

namespace ttskit {

enum class StageTag { kSyntheticPretrain, kCleanFinetune };

inline const char* stage_name(StageTag tag) {
  return tag == StageTag::kSyntheticPretrain ? "synthetic-pretrain"
                                             : "clean-finetune";
}

inline StageTag parse_stage(const std::string& s, const std::string& where,
                            std::size_t lineno) {
  if (s == "synthetic-pretrain") return StageTag::kSyntheticPretrain;
  if (s == "clean-finetune") return StageTag::kCleanFinetune;
  throw ParseError(where, lineno, 0, "unknown stage tag '" + s + "'");
}

struct ManifestRecord {
  std::string id;
  StageTag stage = StageTag::kSyntheticPretrain;
  std::string source_tag;
  std::string text;
  std::string label_path;    // relative to the manifest dir; may be empty
  std::string feature_path;  // relative to the manifest dir
};

struct CorpusManifest {
  int version = 1;
  std::map<std::string, std::string> meta;  // emitted sorted by key
  std::vector<ManifestRecord> records;
};

namespace detail {

inline void check_manifest_field(const std::string& value,
                                 const std::string& what) {
  if (value.find('|') != std::string::npos ||
      value.find('\n') != std::string::npos)
    throw DataError("manifest: " + what + " contains a reserved character: '" +
                    value + "'");
}

}  // namespace detail

inline std::string render_manifest(const CorpusManifest& manifest) {
  std::string out = "#ttskit-manifest " + std::to_string(manifest.version) +
                    "\n";
  for (const auto& [key, value] : manifest.meta)
    out += "#meta " + key + "=" + value + "\n";
  for (const ManifestRecord& rec : manifest.records) {
    for (const std::string* field :
         {&rec.id, &rec.source_tag, &rec.text, &rec.label_path,
          &rec.feature_path})
      detail::check_manifest_field(*field, "record field");
    out += rec.id;
    out += '|';
    out += stage_name(rec.stage);
    out += '|';
    out += rec.source_tag;
    out += '|';
    out += rec.text;
    out += '|';
    out += rec.label_path;
    out += '|';
    out += rec.feature_path;
    out += '\n';
  }
  return out;
}

inline void write_manifest(const CorpusManifest& manifest,
                           const std::filesystem::path& path) {
  write_file_atomic(path, render_manifest(manifest));
}

inline CorpusManifest parse_manifest_file(const std::filesystem::path& path) {
  CorpusManifest manifest;
  const std::string where = path.string();
  std::size_t lineno = 0;
  bool saw_header = false;
  for (const std::string& raw : read_lines(path)) {
    ++lineno;
    if (raw.empty()) continue;
    if (raw.rfind("#ttskit-manifest ", 0) == 0) {
      manifest.version = static_cast<int>(
          parse_long(trim(raw.substr(17)), where, lineno));
      saw_header = true;
      continue;
    }
    if (raw.rfind("#meta ", 0) == 0) {
      std::string kv = raw.substr(6);
      std::size_t eq = kv.find('=');
      if (eq == std::string::npos)
        throw ParseError(where, lineno, 0, "expected '#meta key=value'");
      manifest.meta[kv.substr(0, eq)] = kv.substr(eq + 1);
      continue;
    }
    if (raw.front() == '#') continue;
    std::vector<std::string> f = split_on(raw, '|');
    if (f.size() != 6)
      throw ParseError(where, lineno, 0,
                       "expected 6 pipe-separated fields, got " +
                       std::to_string(f.size()));
    ManifestRecord rec;
    rec.id = f[0];
    rec.stage = parse_stage(f[1], where, lineno);
    rec.source_tag = f[2];
    rec.text = f[3];
    rec.label_path = f[4];
    rec.feature_path = f[5];
    manifest.records.push_back(std::move(rec));
  }
  if (!saw_header)
    throw ParseError(where, 1, 0, "missing #ttskit-manifest header");
  return manifest;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct ValidationFinding {
  std::string code;
  std::string message;
  std::vector<std::size_t> rows;  // 0-based record indices
};

struct ValidationReport {
  std::vector<ValidationFinding> findings;
  bool ok() const { return findings.empty(); }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : findings)
      arr.push_back({{"code", f.code}, {"message", f.message},
                     {"rows", f.rows}});
    return {{"findings", arr}, {"ok", ok()}};
  }
};

// Checks id uniqueness, stage tags (already typed), path existence relative
// to manifest_dir, and sidecar/frame-count consistency for synthetic
// trajectories.
inline ValidationReport validate_manifest(
    const CorpusManifest& manifest, const std::filesystem::path& manifest_dir) {
  namespace fs = std::filesystem;
  ValidationReport report;
  std::map<std::string, std::vector<std::size_t>> by_id;
  for (std::size_t i = 0; i < manifest.records.size(); ++i)
    by_id[manifest.records[i].id].push_back(i);
  for (const auto& [id, rows] : by_id) {
    if (rows.size() > 1)
      report.findings.push_back(
          {"duplicate-id", "record id '" + id + "' appears " +
                               std::to_string(rows.size()) + " times",
           rows});
  }
  for (std::size_t i = 0; i < manifest.records.size(); ++i) {
    const ManifestRecord& rec = manifest.records[i];
    for (const std::string* path : {&rec.label_path, &rec.feature_path}) {
      if (path->empty()) continue;
      fs::path full = manifest_dir / *path;
      if (!fs::exists(full)) {
        report.findings.push_back(
            {"missing-path", "record '" + rec.id + "' references missing '" +
                                 *path + "'",
             {i}});
      }
    }
    if (rec.stage == StageTag::kSyntheticPretrain && !rec.feature_path.empty()) {
      fs::path feat = manifest_dir / rec.feature_path;
      fs::path side = trajectory_sidecar_path(feat);
      if (!fs::exists(side)) {
        report.findings.push_back(
            {"missing-sidecar", "record '" + rec.id + "' lacks sidecar '" +
                                    side.string() + "'",
             {i}});
      } else if (fs::exists(feat)) {
        try {
          TrajectorySidecar sc = read_trajectory_sidecar(feat);
          std::uintmax_t actual = fs::file_size(feat);
          std::uintmax_t expected = static_cast<std::uintmax_t>(
              sc.frame_count * sc.dim * sizeof(float));
          if (actual != expected) {
            report.findings.push_back(
                {"frame-count-mismatch",
                 "record '" + rec.id + "': sidecar declares " +
                     std::to_string(sc.frame_count) + " frames (" +
                     std::to_string(expected) + " bytes) but file has " +
                     std::to_string(actual) + " bytes",
                 {i}});
          }
        } catch (const std::exception& e) {
          report.findings.push_back(
              {"bad-sidecar", "record '" + rec.id + "': " + e.what(), {i}});
        }
      }
    }
  }
  return report;
}

}  // namespace ttskit

#endif  // TTSKIT_MANIFEST_HPP_
