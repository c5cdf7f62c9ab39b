// ttskit/pipeline.hpp
//
// Data-level orchestration of the augmentation recipe: normalize multi-domain
// text, synthesize a feature trajectory for every sentence (LM split, G2P,
// context expansion, duration prediction, mean-trajectory generation), and
// emit staged manifests: a synthetic-pretrain set and a clean fine-tune set.
// Neural training itself is out of scope; the manifests are the contract.

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

#ifndef TTSKIT_PIPELINE_HPP_
#define TTSKIT_PIPELINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ttskit/acoustic_model.hpp"
#include "ttskit/arpa.hpp"
#include "ttskit/cluster_tree.hpp"
#include "ttskit/common.hpp"
#include "ttskit/config.hpp"
#include "ttskit/context_stats.hpp"
#include "ttskit/duration_model.hpp"
#include "ttskit/g2p.hpp"
#include "ttskit/labels.hpp"
#include "ttskit/manifest.hpp"
#include "ttskit/ngram_model.hpp"
#include "ttskit/parallel.hpp"
#include "ttskit/phoneset.hpp"
#include "ttskit/questions.hpp"
#include "ttskit/splitter.hpp"
#include "ttskit/textnorm.hpp"

namespace ttskit {

struct PipelineConfig {
  std::filesystem::path output_root;
  std::filesystem::path raw_text;
  std::filesystem::path tts_text;
  std::filesystem::path clean_corpus;
  std::filesystem::path phoneset_path;
  std::filesystem::path g2p_rules_path;
  std::filesystem::path questions_path;
  std::filesystem::path alignments_path;

  NormalizationConfig norm;
  NgramConfig lm;
  std::string lm_train_text = "tts+multidomain";  // or "tts"
  double split_threshold = kDefaultSplitThreshold;
  std::size_t pause_frames = 0;
  GrowOptions cluster;
  double rho = 0.0;
  double frame_period_ms = 5.0;
  std::size_t smooth_window = 0;
  bool stage_synthetic = true;
  bool stage_clean = true;
  long finetune_epochs = 200;

  static const std::set<std::string>& schema() {
    static const std::set<std::string> kKeys = {
        "output_root", "raw_text", "tts_text", "clean_corpus", "phoneset",
        "g2p_rules", "questions", "alignments",
        "norm.strip_set", "norm.sentence_delimiters", "norm.lowercase_fold",
        "norm.translit_file",
        "lm.order", "lm.unknown_floor", "lm.include_unknown", "lm.log_base",
        "lm.train_text",
        "split.threshold", "split.pause_frames",
        "cluster.min_occupancy", "cluster.min_gain", "cluster.variance_floor",
        "duration.rho",
        "acoustic.frame_period_ms", "acoustic.smooth_window",
        "stages.synthetic", "stages.clean",
        "finetune.epochs"};
    return kKeys;
  }

  static PipelineConfig from_file(const std::filesystem::path& path) {
    KvConfig kv = KvConfig::parse_file(path);
    kv.reject_unknown_keys(schema());
    PipelineConfig cfg;
    cfg.output_root = kv.get_path("output_root");
    cfg.stage_synthetic = kv.get_bool("stages.synthetic", true);
    cfg.stage_clean = kv.get_bool("stages.clean", true);
    if (kv.has("raw_text")) cfg.raw_text = kv.get_path("raw_text");
    if (kv.has("tts_text")) cfg.tts_text = kv.get_path("tts_text");
    if (kv.has("clean_corpus")) cfg.clean_corpus = kv.get_path("clean_corpus");
    if (kv.has("phoneset")) cfg.phoneset_path = kv.get_path("phoneset");
    if (kv.has("g2p_rules")) cfg.g2p_rules_path = kv.get_path("g2p_rules");
    if (kv.has("questions")) cfg.questions_path = kv.get_path("questions");
    if (kv.has("alignments")) cfg.alignments_path = kv.get_path("alignments");
    cfg.norm = NormalizationConfig::from_kv(kv, "norm.");
    cfg.lm.order = static_cast<int>(kv.get_int("lm.order", 2));
    cfg.lm.unknown_floor = kv.get_int("lm.unknown_floor", 1);
    cfg.lm.include_unknown = kv.get_bool("lm.include_unknown", true);
    std::string base = kv.get_string("lm.log_base", "log10");
    if (base == "log10") {
      cfg.lm.log_base = LogBase::kLog10;
    } else if (base == "ln") {
      cfg.lm.log_base = LogBase::kNatural;
    } else {
      throw ConfigError(kv.source() + ": lm.log_base must be log10 or ln");
    }
    cfg.lm_train_text = kv.get_string("lm.train_text", "tts+multidomain");
    if (cfg.lm_train_text != "tts" && cfg.lm_train_text != "tts+multidomain")
      throw ConfigError(kv.source() +
                        ": lm.train_text must be tts or tts+multidomain");
    cfg.split_threshold =
        kv.get_double("split.threshold", kDefaultSplitThreshold);
    cfg.pause_frames =
        static_cast<std::size_t>(kv.get_int("split.pause_frames", 0));
    cfg.cluster.min_occupancy = kv.get_double("cluster.min_occupancy", 10.0);
    cfg.cluster.min_gain = kv.get_double("cluster.min_gain", 0.0);
    cfg.cluster.variance_floor =
        kv.get_double("cluster.variance_floor", 1e-4);
    cfg.rho = kv.get_double("duration.rho", 0.0);
    cfg.frame_period_ms = kv.get_double("acoustic.frame_period_ms", 5.0);
    cfg.smooth_window =
        static_cast<std::size_t>(kv.get_int("acoustic.smooth_window", 0));
    cfg.finetune_epochs = kv.get_int("finetune.epochs", 200);
    return cfg;
  }
};

struct SynthesisModels {
  PhoneSet phoneset;
  G2PRules rules;
  NgramModel lm;
  DurationModel duration;
  AcousticModel acoustic;
  double split_threshold = kDefaultSplitThreshold;
  std::size_t pause_frames = 0;
  std::size_t smooth_window = 0;
};

struct SkipEntry {
  std::string id;
  std::string reason;
};

struct SyntheticBuild {
  CorpusManifest manifest;
  std::vector<SkipEntry> skips;
};

namespace detail {

inline std::string file_safe_id(const std::string& id) {
  std::string out = id;
  for (char& c : out)
    if (c == ':' || c == '/' || c == '\\') c = '_';
  return out;
}

inline FullContextLabel pause_label(const PhoneSet& ps) {
  const std::string& sil = ps.silence_symbol;
  return {sil, sil, sil, sil, sil, 0};
}

}  // namespace detail

// Synthesizes one sentence: LM split, per-segment G2P + context expansion +
// duration prediction, inter-segment pauses, one trajectory over the
// concatenated segments. Returns the concatenated labels and durations too
// so callers can cross-check frame conservation.
struct SentenceSynthesis {
  std::vector<FullContextLabel> labels;
  std::vector<int> durations;
  FeatureTrajectory trajectory;
  SplitResult split_result;
};

inline SentenceSynthesis synthesize_sentence(
    const std::vector<std::string>& tokens, const SynthesisModels& models) {
  SentenceSynthesis out;
  out.split_result = split(models.lm, tokens, models.split_threshold);
  SynthesisPlan plan = plan_synthesis(out.split_result, models.pause_frames);
  for (std::size_t s = 0; s < plan.segment_tokens.size(); ++s) {
    if (s > 0 && models.pause_frames > 0) {
      FullContextLabel pause = detail::pause_label(models.phoneset);
      pause.phone_index = out.labels.size();
      out.labels.push_back(pause);
      out.durations.push_back(static_cast<int>(models.pause_frames));
    }
    std::vector<std::string> phones;
    for (const std::string& word : plan.segment_tokens[s]) {
      std::vector<std::string> wp = g2p(word, models.rules);
      phones.insert(phones.end(), wp.begin(), wp.end());
    }
    std::vector<FullContextLabel> seg_labels =
        expand_contexts(phones, models.phoneset);
    std::vector<int> seg_durations = models.duration.predict(seg_labels);
    for (auto& label : seg_labels) {
      label.phone_index = out.labels.size();
      out.labels.push_back(label);
    }
    out.durations.insert(out.durations.end(), seg_durations.begin(),
                         seg_durations.end());
  }
  out.trajectory =
      models.acoustic.generate(out.labels, out.durations, models.smooth_window);
  return out;
}

inline SyntheticBuild build_synthetic_corpus(
    const std::vector<NormalizedSentence>& sentences,
    const SynthesisModels& models, const std::filesystem::path& out_root,
    unsigned workers = 1) {
  namespace fs = std::filesystem;
  fs::create_directories(out_root / "labels");
  fs::create_directories(out_root / "features");

  struct Outcome {
    std::optional<ManifestRecord> record;
    std::optional<SkipEntry> skip;
  };
  std::vector<Outcome> outcomes(sentences.size());
  parallel_for(sentences.size(), workers, [&](std::size_t i) {
    const NormalizedSentence& sent = sentences[i];
    std::string safe = detail::file_safe_id(sent.id);
    try {
      SentenceSynthesis synth = synthesize_sentence(sent.tokens, models);
      std::string label_rel = "labels/" + safe + ".lab";
      std::string feature_rel = "features/" + safe + ".feat";
      write_label_file(synth.labels, out_root / label_rel);
      write_trajectory(synth.trajectory, out_root / feature_rel);
      ManifestRecord rec;
      rec.id = sent.id;
      rec.stage = StageTag::kSyntheticPretrain;
      rec.source_tag = sent.source_tag;
      rec.text = sent.text();
      rec.label_path = label_rel;
      rec.feature_path = feature_rel;
      outcomes[i].record = std::move(rec);
    } catch (const G2PError& e) {
      outcomes[i].skip = SkipEntry{sent.id, e.what()};
    }
  });

  SyntheticBuild build;
  build.manifest.meta["stage_order"] = "synthetic-pretrain,clean-finetune";
  for (auto& outcome : outcomes) {
    if (outcome.record) build.manifest.records.push_back(*outcome.record);
    if (outcome.skip) build.skips.push_back(*outcome.skip);
  }
  return build;
}

// ---------------------------------------------------------------------------
// Clean fine-tune stage
// ---------------------------------------------------------------------------

struct CleanPair {
  std::string text;
  std::filesystem::path audio_path;
};

// `text<TAB>audio_path`, audio paths relative to the file's directory.
inline std::vector<CleanPair> read_clean_corpus(
    const std::filesystem::path& path) {
  std::vector<CleanPair> pairs;
  std::filesystem::path dir =
      path.has_parent_path() ? path.parent_path() : ".";
  std::size_t lineno = 0;
  for (const std::string& line : read_lines(path)) {
    ++lineno;
    if (trim(line).empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(path.string(), lineno, 0,
                       "expected 'text<TAB>audio_path'");
    CleanPair pair;
    pair.text = join(split_whitespace(line.substr(0, tab)), " ");
    std::filesystem::path audio(trim(line.substr(tab + 1)));
    pair.audio_path = audio.is_absolute() ? audio : dir / audio;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

struct CleanStage {
  CorpusManifest manifest;
  std::vector<SkipEntry> errors;  // missing audio files
};

inline CleanStage stage_clean_corpus(const std::vector<CleanPair>& pairs,
                                     const std::filesystem::path& out_root,
                                     long finetune_epochs = 200) {
  namespace fs = std::filesystem;
  CleanStage stage;
  stage.manifest.meta["stage_order"] = "synthetic-pretrain,clean-finetune";
  stage.manifest.meta["finetune_epochs"] = std::to_string(finetune_epochs);
  fs::path base = fs::weakly_canonical(out_root);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const CleanPair& pair = pairs[i];
    std::string id = "clean:" + std::to_string(i + 1);
    if (!fs::exists(pair.audio_path)) {
      stage.errors.push_back(
          {id, "missing audio file '" + pair.audio_path.string() + "'"});
      continue;
    }
    ManifestRecord rec;
    rec.id = id;
    rec.stage = StageTag::kCleanFinetune;
    rec.text = pair.text;
    rec.feature_path =
        fs::relative(fs::weakly_canonical(pair.audio_path), base).string();
    stage.manifest.records.push_back(std::move(rec));
  }
  return stage;
}

// ---------------------------------------------------------------------------
// Full run
// ---------------------------------------------------------------------------

struct PipelineSummary {
  std::size_t input_documents = 0;
  std::size_t input_sentences = 0;
  std::size_t synthetic_records = 0;
  std::size_t skips = 0;
  std::size_t clean_records = 0;
  std::size_t clean_errors = 0;
  std::vector<SkipEntry> skip_entries;
  std::vector<SkipEntry> clean_error_entries;
  std::vector<DocIssue> normalization_issues;
  std::vector<std::string> warnings;
  std::filesystem::path synthetic_manifest;
  std::filesystem::path clean_manifest;

  nlohmann::json to_json() const {
    nlohmann::json skips_json = nlohmann::json::array();
    for (const auto& s : skip_entries)
      skips_json.push_back({{"id", s.id}, {"reason", s.reason}});
    nlohmann::json clean_json = nlohmann::json::array();
    for (const auto& s : clean_error_entries)
      clean_json.push_back({{"id", s.id}, {"reason", s.reason}});
    nlohmann::json issues_json = nlohmann::json::array();
    for (const auto& issue : normalization_issues)
      issues_json.push_back(
          {{"doc", issue.doc_id},
           {"kind", issue.kind == DocIssueKind::kDecodeError ? "decode-error"
                                                             : "empty"},
           {"message", issue.message}});
    return {{"input_documents", input_documents},
            {"input_sentences", input_sentences},
            {"synthetic_records", synthetic_records},
            {"skips", skips_json},
            {"skip_count", skips},
            {"clean_records", clean_records},
            {"clean_errors", clean_json},
            {"normalization_issues", issues_json},
            {"warnings", warnings}};
  }
};

inline PipelineSummary run_pipeline(const PipelineConfig& cfg,
                                    unsigned workers = 0) {
  namespace fs = std::filesystem;
  PipelineSummary summary;
  fs::create_directories(cfg.output_root);

  if (cfg.stage_synthetic) {
    if (cfg.raw_text.empty() || cfg.phoneset_path.empty() ||
        cfg.g2p_rules_path.empty() || cfg.questions_path.empty() ||
        cfg.alignments_path.empty() || cfg.tts_text.empty())
      throw ConfigError(
          "pipeline: synthetic stage needs raw_text, tts_text, phoneset, "
          "g2p_rules, questions and alignments");

    SynthesisModels models;
    models.phoneset = PhoneSet::parse_file(cfg.phoneset_path);
    models.rules = G2PRules::parse_file(cfg.g2p_rules_path, &models.phoneset);
    QuestionSet questions =
        parse_question_file(cfg.questions_path, &models.phoneset);
    std::vector<AlignedUtterance> alignments =
        parse_alignment_file(cfg.alignments_path, &models.phoneset);

    // Text front end.
    std::vector<RawDocument> docs = read_documents_per_line(cfg.raw_text);
    summary.input_documents = docs.size();
    NormalizeResult normalized = normalize_corpus(docs, cfg.norm);
    summary.normalization_issues = normalized.issues;
    summary.input_sentences = normalized.sentences.size();

    // Language model.
    std::vector<std::vector<std::string>> lm_corpus =
        read_token_lines(cfg.tts_text);
    if (cfg.lm_train_text == "tts+multidomain")
      for (const auto& s : normalized.sentences) lm_corpus.push_back(s.tokens);
    models.lm = NgramModel::train(lm_corpus, cfg.lm, &summary.warnings);
    export_arpa_file(models.lm, cfg.output_root / "lm.arpa");

    // Parametric models over the aligned data.
    StatsMap acoustic_stats = accumulate_stats(alignments);
    StatsMap duration_stats = accumulate_duration_stats(alignments);
    ClusterTree acoustic_tree = ClusterTree::grow(acoustic_stats, questions,
                                                  cfg.cluster);
    ClusterTree duration_tree = ClusterTree::grow(duration_stats, questions,
                                                  cfg.cluster);
    models.duration =
        train_duration_model(duration_stats, std::move(duration_tree), cfg.rho);
    models.acoustic = train_acoustic_model(acoustic_stats,
                                           std::move(acoustic_tree),
                                           cfg.frame_period_ms);
    models.duration.tree().write_file(cfg.output_root / "duration.tree");
    models.acoustic.tree().write_file(cfg.output_root / "acoustic.tree");
    models.split_threshold = cfg.split_threshold;
    models.pause_frames = cfg.pause_frames;
    models.smooth_window = cfg.smooth_window;

    SyntheticBuild build = build_synthetic_corpus(
        normalized.sentences, models, cfg.output_root, workers);
    summary.synthetic_records = build.manifest.records.size();
    summary.skips = build.skips.size();
    summary.skip_entries = build.skips;
    summary.synthetic_manifest =
        cfg.output_root / "manifest.synthetic-pretrain.txt";
    write_manifest(build.manifest, summary.synthetic_manifest);
  }

  if (cfg.stage_clean) {
    if (cfg.clean_corpus.empty())
      throw ConfigError("pipeline: clean stage needs clean_corpus");
    CleanStage clean = stage_clean_corpus(read_clean_corpus(cfg.clean_corpus),
                                          cfg.output_root,
                                          cfg.finetune_epochs);
    summary.clean_records = clean.manifest.records.size();
    summary.clean_errors = clean.errors.size();
    summary.clean_error_entries = clean.errors;
    summary.clean_manifest = cfg.output_root / "manifest.clean-finetune.txt";
    write_manifest(clean.manifest, summary.clean_manifest);
  }

  write_file_atomic(cfg.output_root / "summary.json",
                    summary.to_json().dump(2) + "\n");
  return summary;
}

}  // namespace ttskit

#endif  // TTSKIT_PIPELINE_HPP_
