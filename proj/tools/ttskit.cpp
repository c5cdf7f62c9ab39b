// tools/ttskit.cpp
//
// Single entry-point command for the toolkit. Subcommands cover the full
// data path: normalize, lm {train,score,export,import}, split, g2p, labels,
// cluster, duration, synthesize, pipeline run, eval {errors,mos,significance}.
//
// Exit codes: 0 success, 1 usage error, 2 data error. Diagnostics go to
// stderr; data goes to stdout or to files.

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

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ttskit/ttskit.hpp"

namespace {

constexpr const char* kVersion = "ttskit 0.1.0";

void emit(const std::string& data, const std::string& out_path) {
  if (out_path.empty())
    std::cout << data;
  else
    ttskit::write_file_atomic(out_path, data);
}

std::vector<double> read_number_file(const std::string& path) {
  std::vector<double> out;
  std::size_t lineno = 0;
  for (const std::string& line : ttskit::read_lines(path)) {
    ++lineno;
    auto t = ttskit::trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(ttskit::parse_double(t, path, lineno));
  }
  return out;
}

// ---------------------------------------------------------------------------
// normalize
// ---------------------------------------------------------------------------

struct NormalizeArgs {
  std::string config, input, out, drops, source;
  bool per_file = false;
  bool stats = false;
};

int run_normalize(const NormalizeArgs& args) {
  ttskit::NormalizationConfig cfg =
      ttskit::NormalizationConfig::from_file(args.config);
  std::vector<ttskit::RawDocument> docs;
  if (args.per_file)
    docs.push_back(ttskit::read_document_file(args.input, args.source));
  else
    docs = ttskit::read_documents_per_line(args.input);
  ttskit::NormalizeResult result = ttskit::normalize_corpus(docs, cfg);
  for (const auto& issue : result.issues)
    std::cerr << "normalize: dropped '" << issue.doc_id
              << "': " << issue.message << "\n";
  if (!args.out.empty() || !args.stats)
    emit(ttskit::render_sentences(result.sentences), args.out);
  if (!args.drops.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& issue : result.issues)
      arr.push_back({{"doc", issue.doc_id},
                     {"kind", issue.kind == ttskit::DocIssueKind::kDecodeError
                                  ? "decode-error"
                                  : "empty"},
                     {"message", issue.message}});
    ttskit::write_file_atomic(args.drops, arr.dump(2) + "\n");
  }
  if (args.stats) {
    ttskit::CorpusStats stats = ttskit::corpus_stats(result.sentences);
    nlohmann::json j = {{"sentences", stats.sentence_count},
                        {"tokens", stats.token_count},
                        {"vocabulary", stats.vocabulary_size},
                        {"sentences_per_source", stats.sentences_per_source},
                        {"tokens_per_source", stats.tokens_per_source}};
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// lm
// ---------------------------------------------------------------------------

struct LmTrainArgs {
  std::string text, out, log_base = "log10";
  int order = 2;
  long floor = 1;
  bool no_unk = false;
};

int run_lm_train(const LmTrainArgs& args) {
  ttskit::NgramConfig cfg;
  cfg.order = args.order;
  cfg.unknown_floor = args.floor;
  cfg.include_unknown = !args.no_unk;
  cfg.log_base = args.log_base == "ln" ? ttskit::LogBase::kNatural
                                       : ttskit::LogBase::kLog10;
  std::vector<std::string> warnings;
  ttskit::NgramModel model = ttskit::NgramModel::train(
      ttskit::read_token_lines(args.text), cfg, &warnings);
  for (const auto& w : warnings) std::cerr << w << "\n";
  ttskit::export_arpa_file(model, args.out);
  std::cerr << "lm train: order " << model.order() << ", vocabulary "
            << model.words().size() << ", written to " << args.out << "\n";
  return 0;
}

struct LmScoreArgs {
  std::string lm, text, mode = "normalized", out;
};

int run_lm_score(const LmScoreArgs& args) {
  ttskit::NgramModel model = ttskit::import_arpa_file(args.lm);
  std::ostringstream out;
  char buf[64];
  for (const auto& tokens : ttskit::read_token_lines(args.text)) {
    if (args.mode == "bigram") {
      for (const auto& sb : model.score_bigrams(tokens)) {
        std::snprintf(buf, sizeof(buf), "%.6f", sb.log_likelihood);
        out << sb.left << '\t' << sb.right << '\t' << buf << '\n';
      }
      out << '\n';
    } else {
      double score = args.mode == "sentence"
                         ? model.sentence_log_likelihood(tokens)
                         : model.normalized_log_likelihood(tokens);
      std::snprintf(buf, sizeof(buf), "%.6f", score);
      out << buf << '\t' << ttskit::join(tokens, " ") << '\n';
    }
  }
  emit(out.str(), args.out);
  return 0;
}

int run_lm_export(const std::string& lm, const std::string& out) {
  ttskit::export_arpa_file(ttskit::import_arpa_file(lm), out);
  return 0;
}

int run_lm_import(const std::string& lm) {
  ttskit::NgramModel model = ttskit::import_arpa_file(lm);
  nlohmann::json j = {{"order", model.order()},
                      {"vocabulary", model.words().size()},
                      {"has_unknown", model.has_unknown()}};
  for (int k = 1; k <= model.order(); ++k)
    j["ngrams"][std::to_string(k)] = model.prob_levels()[k].size();
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// split
// ---------------------------------------------------------------------------

struct SplitArgs {
  std::string lm, text, out, sweep;
  double threshold = ttskit::kDefaultSplitThreshold;
  bool records = false;
};

int run_split(const SplitArgs& args) {
  ttskit::NgramModel model = ttskit::import_arpa_file(args.lm);
  std::vector<std::vector<std::string>> sentences =
      ttskit::read_token_lines(args.text);
  std::ostringstream out;
  if (!args.sweep.empty()) {
    std::vector<std::string> parts = ttskit::split_on(args.sweep, ':');
    if (parts.size() != 3)
      throw ttskit::ConfigError("split: --sweep expects lo:hi:step");
    double lo = ttskit::parse_double(parts[0], "--sweep", 0);
    double hi = ttskit::parse_double(parts[1], "--sweep", 0);
    double step = ttskit::parse_double(parts[2], "--sweep", 0);
    if (step <= 0) throw ttskit::ConfigError("split: sweep step must be > 0");
    std::vector<double> thresholds;
    for (double t = lo; t <= hi + 1e-12; t += step) thresholds.push_back(t);
    for (const auto& entry :
         ttskit::sweep_thresholds(model, sentences, thresholds)) {
      nlohmann::json hist = nlohmann::json::object();
      for (const auto& [len, count] : entry.segment_length_histogram)
        hist[std::to_string(len)] = count;
      nlohmann::json j = {{"threshold", entry.threshold},
                          {"splits", entry.split_count},
                          {"segments", entry.segment_count},
                          {"segment_length_histogram", hist}};
      out << j.dump() << '\n';
    }
    emit(out.str(), args.out);
    return 0;
  }
  for (const auto& tokens : sentences) {
    ttskit::SplitResult r = ttskit::split(model, tokens, args.threshold);
    if (args.records) {
      nlohmann::json splits = nlohmann::json::array();
      for (const auto& sp : r.split_points)
        splits.push_back({{"after_index", sp.index},
                          {"left", sp.bigram.left},
                          {"right", sp.bigram.right},
                          {"score", sp.bigram.log_likelihood}});
      nlohmann::json j = {{"tokens", tokens}, {"splits", splits}};
      out << j.dump() << '\n';
    } else {
      for (const auto& seg : r.segments) out << ttskit::join(seg, " ") << '\n';
      out << '\n';
    }
  }
  emit(out.str(), args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// g2p / labels
// ---------------------------------------------------------------------------

struct G2pArgs {
  std::string rules, phoneset, text, word, out;
};

int run_g2p(const G2pArgs& args) {
  ttskit::PhoneSet ps = ttskit::PhoneSet::parse_file(args.phoneset);
  ttskit::G2PRules rules = ttskit::G2PRules::parse_file(args.rules, &ps);
  std::vector<std::string> words;
  if (!args.word.empty()) words.push_back(args.word);
  if (!args.text.empty())
    for (const auto& tokens : ttskit::read_token_lines(args.text))
      words.insert(words.end(), tokens.begin(), tokens.end());
  std::ostringstream out;
  for (const auto& w : words)
    out << w << '\t' << ttskit::join(ttskit::g2p(w, rules), " ") << '\n';
  emit(out.str(), args.out);
  return 0;
}

struct LabelsArgs {
  std::string phoneset, rules, text, check, out;
};

int run_labels(const LabelsArgs& args) {
  ttskit::PhoneSet ps = ttskit::PhoneSet::parse_file(args.phoneset);
  if (!args.check.empty()) {
    std::vector<ttskit::FullContextLabel> labels =
        ttskit::parse_label_file(args.check, &ps);
    emit(ttskit::render_label_file(labels), args.out);
    return 0;
  }
  if (args.text.empty() || args.rules.empty())
    throw ttskit::ConfigError("labels: need --text and --rules (or --check)");
  ttskit::G2PRules rules = ttskit::G2PRules::parse_file(args.rules, &ps);
  std::ostringstream out;
  for (const auto& tokens : ttskit::read_token_lines(args.text)) {
    std::vector<std::string> phones;
    for (const auto& w : tokens) {
      std::vector<std::string> wp = ttskit::g2p(w, rules);
      phones.insert(phones.end(), wp.begin(), wp.end());
    }
    for (const auto& label : ttskit::expand_contexts(phones, ps))
      out << label.to_string() << '\n';
    out << '\n';
  }
  emit(out.str(), args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// cluster / duration / synthesize
// ---------------------------------------------------------------------------

struct ClusterArgs {
  std::string align, questions, phoneset, mode = "acoustic", out;
  double min_occupancy = 10.0;
  double min_gain = 0.0;
  double variance_floor = 1e-4;
};

int run_cluster(const ClusterArgs& args) {
  ttskit::PhoneSet ps = ttskit::PhoneSet::parse_file(args.phoneset);
  ttskit::QuestionSet questions =
      ttskit::parse_question_file(args.questions, &ps);
  std::vector<ttskit::AlignedUtterance> utts =
      ttskit::parse_alignment_file(args.align, &ps);
  ttskit::StatsMap stats = args.mode == "duration"
                               ? ttskit::accumulate_duration_stats(utts)
                               : ttskit::accumulate_stats(utts);
  ttskit::GrowOptions opts;
  opts.min_occupancy = args.min_occupancy;
  opts.min_gain = args.min_gain;
  opts.variance_floor = args.variance_floor;
  ttskit::ClusterTree tree = ttskit::ClusterTree::grow(stats, questions, opts);
  tree.write_file(args.out);
  std::cerr << "cluster: " << stats.size() << " contexts -> "
            << tree.leaf_count() << " leaves (" << tree.nodes().size()
            << " nodes), written to " << args.out << "\n";
  return 0;
}

struct DurationArgs {
  std::string model, labels, phoneset, out;
  double rho = 0.0;
};

int run_duration(const DurationArgs& args) {
  ttskit::ClusterTree tree = ttskit::ClusterTree::parse_file(args.model);
  ttskit::DurationModel model(std::move(tree), args.rho);
  ttskit::PhoneSet ps = ttskit::PhoneSet::parse_file(args.phoneset);
  std::vector<ttskit::FullContextLabel> labels =
      ttskit::parse_label_file(args.labels, &ps);
  std::ostringstream out;
  for (const auto& label : labels)
    out << label.to_string() << '\t' << model.predict_one(label) << '\n';
  emit(out.str(), args.out);
  return 0;
}

struct SynthesizeArgs {
  std::string duration_model, acoustic_model, labels, phoneset, out, dump_text;
  double rho = 0.0;
  double frame_period = 5.0;
  std::size_t smooth_window = 0;
};

int run_synthesize(const SynthesizeArgs& args) {
  ttskit::DurationModel duration(
      ttskit::ClusterTree::parse_file(args.duration_model), args.rho);
  ttskit::AcousticModel acoustic(
      ttskit::ClusterTree::parse_file(args.acoustic_model),
      args.frame_period);
  ttskit::PhoneSet ps = ttskit::PhoneSet::parse_file(args.phoneset);
  std::vector<ttskit::FullContextLabel> labels =
      ttskit::parse_label_file(args.labels, &ps);
  std::vector<int> durations = duration.predict(labels);
  ttskit::FeatureTrajectory traj =
      acoustic.generate(labels, durations, args.smooth_window);
  ttskit::write_trajectory(traj, args.out);
  if (!args.dump_text.empty())
    ttskit::write_file_atomic(args.dump_text,
                              ttskit::render_trajectory_text(traj));
  std::cerr << "synthesize: " << traj.frame_count() << " frames x "
            << traj.dim << " dims -> " << args.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// pipeline
// ---------------------------------------------------------------------------

int run_pipeline_cmd(const std::string& config, unsigned workers) {
  ttskit::PipelineConfig cfg = ttskit::PipelineConfig::from_file(config);
  ttskit::PipelineSummary summary = ttskit::run_pipeline(cfg, workers);
  for (const auto& w : summary.warnings) std::cerr << w << "\n";
  std::cout << summary.to_json().dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalErrorsArgs {
  std::string ref, hyp, json_out;
  bool trace = false;
};

int run_eval_errors(const EvalErrorsArgs& args) {
  std::vector<std::vector<std::string>> refs =
      ttskit::read_token_lines(args.ref);
  std::vector<std::vector<std::string>> hyps =
      ttskit::read_token_lines(args.hyp);
  ttskit::ErrorReport report = ttskit::report_errors(refs, hyps);
  std::ostringstream out;
  for (std::size_t u = 0; u < report.utterances.size(); ++u) {
    const auto& utt = report.utterances[u];
    out << utt.id << "\tskips=" << utt.counts.skips
        << "\trepetitions=" << utt.counts.repetitions
        << "\tmispronunciations=" << utt.counts.mispronunciations
        << "\tinsertions=" << utt.counts.insertions
        << "\tedit_distance=" << utt.counts.edit_distance << '\n';
    if (args.trace)
      out << ttskit::render_alignment_trace(refs[u], hyps[u], utt.counts);
  }
  out << "total\tskips=" << report.totals.skips
      << "\trepetitions=" << report.totals.repetitions
      << "\tmispronunciations=" << report.totals.mispronunciations
      << "\tinsertions=" << report.totals.insertions
      << "\tedit_distance=" << report.totals.edit_distance << '\n';
  std::cout << out.str();
  if (!args.json_out.empty()) {
    nlohmann::json utts = nlohmann::json::array();
    for (const auto& utt : report.utterances)
      utts.push_back({{"id", utt.id},
                      {"skips", utt.counts.skips},
                      {"repetitions", utt.counts.repetitions},
                      {"mispronunciations", utt.counts.mispronunciations},
                      {"insertions", utt.counts.insertions},
                      {"edit_distance", utt.counts.edit_distance}});
    nlohmann::json j = {{"utterances", utts},
                        {"totals",
                         {{"skips", report.totals.skips},
                          {"repetitions", report.totals.repetitions},
                          {"mispronunciations",
                           report.totals.mispronunciations},
                          {"insertions", report.totals.insertions},
                          {"edit_distance", report.totals.edit_distance}}}};
    ttskit::write_file_atomic(args.json_out, j.dump(2) + "\n");
  }
  return 0;
}

struct EvalMosArgs {
  std::string ratings, system, ground_truth;
};

int run_eval_mos(const EvalMosArgs& args) {
  std::vector<ttskit::Rating> all = ttskit::parse_ratings_file(args.ratings);
  std::vector<std::string> systems;
  if (!args.system.empty()) {
    systems.push_back(args.system);
  } else {
    std::set<std::string> seen;
    for (const auto& r : all)
      if (seen.insert(r.system).second && r.system != args.ground_truth)
        systems.push_back(r.system);
    std::sort(systems.begin(), systems.end());
  }
  for (const auto& system : systems) {
    ttskit::RatingSet set = ttskit::filter_system(all, system);
    ttskit::ScoreSummary summary;
    if (!args.ground_truth.empty()) {
      ttskit::RatingSet gt = ttskit::filter_system(all, args.ground_truth);
      summary = ttskit::summarize_with_dmos(set, gt);
    } else {
      summary = ttskit::summarize_ratings(set);
    }
    std::cout << system << '\t' << ttskit::render_summary(summary);
    if (summary.dmos) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", *summary.dmos);
      std::cout << "\tDMOS=" << buf;
    }
    std::cout << '\n';
  }
  return 0;
}

struct EvalSignificanceArgs {
  std::string a, b;
  bool paired = false;
};

int run_eval_significance(const EvalSignificanceArgs& args) {
  std::vector<double> a = read_number_file(args.a);
  std::vector<double> b = read_number_file(args.b);
  ttskit::TTestResult r = args.paired ? ttskit::paired_t_test(a, b)
                                      : ttskit::welch_t_test(a, b);
  nlohmann::json j = {{"t", r.t},
                      {"df", r.degrees_of_freedom},
                      {"p", r.p},
                      {"test", args.paired ? "paired" : "welch"}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HMM-based data augmentation toolkit for conversational TTS"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // normalize
  NormalizeArgs norm_args;
  CLI::App* norm = app.add_subcommand("normalize", "Clean and tokenize text");
  norm->add_option("--config", norm_args.config, "normalization config file")
      ->required();
  norm->add_option("--in", norm_args.input, "input text file")->required();
  norm->add_flag("--per-file", norm_args.per_file,
                 "treat the whole file as one document");
  norm->add_option("--source", norm_args.source,
                   "source tag for --per-file mode");
  norm->add_option("--out", norm_args.out, "output file (default stdout)");
  norm->add_option("--drops", norm_args.drops, "JSON report of dropped docs");
  norm->add_flag("--stats", norm_args.stats, "print corpus stats JSON");

  // lm
  CLI::App* lm = app.add_subcommand("lm", "n-gram language model");
  lm->require_subcommand(1);
  LmTrainArgs lm_train_args;
  CLI::App* lm_train = lm->add_subcommand("train", "train a Kneser-Ney model");
  lm_train->add_option("--text", lm_train_args.text, "training sentences")
      ->required();
  lm_train->add_option("--out", lm_train_args.out, "output ARPA file")
      ->required();
  lm_train->add_option("--order", lm_train_args.order, "n-gram order");
  lm_train->add_option("--floor", lm_train_args.floor,
                       "unknown-word frequency floor");
  lm_train->add_flag("--no-unk", lm_train_args.no_unk,
                     "train without an unknown marker");
  lm_train->add_option("--log-base", lm_train_args.log_base,
                       "log10 or ln score base")
      ->check(CLI::IsMember({"log10", "ln"}));

  LmScoreArgs lm_score_args;
  CLI::App* lm_score = lm->add_subcommand("score", "score sentences");
  lm_score->add_option("--lm", lm_score_args.lm, "ARPA model")->required();
  lm_score->add_option("--text", lm_score_args.text, "sentences")->required();
  lm_score->add_option("--mode", lm_score_args.mode,
                       "sentence|normalized|bigram")
      ->check(CLI::IsMember({"sentence", "normalized", "bigram"}));
  lm_score->add_option("--out", lm_score_args.out, "output file");

  std::string lm_in, lm_out;
  CLI::App* lm_export =
      lm->add_subcommand("export", "re-emit an ARPA file in canonical form");
  lm_export->add_option("--lm", lm_in, "input ARPA")->required();
  lm_export->add_option("--out", lm_out, "output ARPA")->required();
  CLI::App* lm_import =
      lm->add_subcommand("import", "validate an ARPA file and print stats");
  lm_import->add_option("--lm", lm_in, "input ARPA")->required();

  // split
  SplitArgs split_args;
  CLI::App* split_cmd =
      app.add_subcommand("split", "split sentences at low-likelihood bigrams");
  split_cmd->add_option("--lm", split_args.lm, "ARPA model")->required();
  split_cmd->add_option("--text", split_args.text, "sentences")->required();
  split_cmd->add_option("--threshold", split_args.threshold,
                        "log-likelihood split threshold");
  split_cmd->add_flag("--records", split_args.records,
                      "machine-readable JSON lines");
  split_cmd->add_option("--sweep", split_args.sweep,
                        "lo:hi:step threshold sweep report");
  split_cmd->add_option("--out", split_args.out, "output file");

  // g2p
  G2pArgs g2p_args;
  CLI::App* g2p_cmd = app.add_subcommand("g2p", "grapheme-to-phoneme");
  g2p_cmd->add_option("--rules", g2p_args.rules, "rule table")->required();
  g2p_cmd->add_option("--phoneset", g2p_args.phoneset, "phone set")
      ->required();
  g2p_cmd->add_option("--text", g2p_args.text, "file of words");
  g2p_cmd->add_option("--word", g2p_args.word, "single word");
  g2p_cmd->add_option("--out", g2p_args.out, "output file");

  // labels
  LabelsArgs labels_args;
  CLI::App* labels_cmd =
      app.add_subcommand("labels", "pentaphone full-context labels");
  labels_cmd->add_option("--phoneset", labels_args.phoneset, "phone set")
      ->required();
  labels_cmd->add_option("--rules", labels_args.rules, "G2P rules");
  labels_cmd->add_option("--text", labels_args.text, "sentences to label");
  labels_cmd->add_option("--check", labels_args.check,
                         "parse a label file and re-emit canonical bytes");
  labels_cmd->add_option("--out", labels_args.out, "output file");

  // cluster
  ClusterArgs cluster_args;
  CLI::App* cluster_cmd =
      app.add_subcommand("cluster", "grow a decision tree over contexts");
  cluster_cmd->add_option("--align", cluster_args.align, "alignment file")
      ->required();
  cluster_cmd->add_option("--questions", cluster_args.questions,
                          "question set")
      ->required();
  cluster_cmd->add_option("--phoneset", cluster_args.phoneset, "phone set")
      ->required();
  cluster_cmd->add_option("--mode", cluster_args.mode, "acoustic|duration")
      ->check(CLI::IsMember({"acoustic", "duration"}));
  cluster_cmd->add_option("--out", cluster_args.out, "output tree file")
      ->required();
  cluster_cmd->add_option("--min-occupancy", cluster_args.min_occupancy,
                          "minimum child occupancy");
  cluster_cmd->add_option("--min-gain", cluster_args.min_gain,
                          "minimum likelihood gain (strict)");
  cluster_cmd->add_option("--variance-floor", cluster_args.variance_floor,
                          "per-dimension variance floor");

  // duration
  DurationArgs duration_args;
  CLI::App* duration_cmd =
      app.add_subcommand("duration", "predict per-phone frame counts");
  duration_cmd->add_option("--model", duration_args.model, "duration tree")
      ->required();
  duration_cmd->add_option("--labels", duration_args.labels, "label file")
      ->required();
  duration_cmd->add_option("--phoneset", duration_args.phoneset, "phone set")
      ->required();
  duration_cmd->add_option("--rho", duration_args.rho, "rate control");
  duration_cmd->add_option("--out", duration_args.out, "output file");

  // synthesize
  SynthesizeArgs synth_args;
  CLI::App* synth_cmd =
      app.add_subcommand("synthesize", "generate a feature trajectory");
  synth_cmd->add_option("--duration-model", synth_args.duration_model,
                        "duration tree")
      ->required();
  synth_cmd->add_option("--acoustic-model", synth_args.acoustic_model,
                        "acoustic tree")
      ->required();
  synth_cmd->add_option("--labels", synth_args.labels, "label file")
      ->required();
  synth_cmd->add_option("--phoneset", synth_args.phoneset, "phone set")
      ->required();
  synth_cmd->add_option("--out", synth_args.out, "output feature file")
      ->required();
  synth_cmd->add_option("--rho", synth_args.rho, "duration rate control");
  synth_cmd->add_option("--frame-period", synth_args.frame_period,
                        "frame period in ms");
  synth_cmd->add_option("--smooth-window", synth_args.smooth_window,
                        "boundary cross-fade window in frames");
  synth_cmd->add_option("--dump-text", synth_args.dump_text,
                        "also write a delimited text dump");

  // pipeline
  std::string pipeline_config;
  unsigned pipeline_workers = 0;
  CLI::App* pipeline_cmd = app.add_subcommand("pipeline", "full data recipe");
  pipeline_cmd->require_subcommand(1);
  CLI::App* pipeline_run =
      pipeline_cmd->add_subcommand("run", "run the staged pipeline");
  pipeline_run->add_option("--config", pipeline_config, "pipeline config file")
      ->required();
  pipeline_run->add_option("--workers", pipeline_workers,
                           "worker threads (0 = all cores)");

  // eval
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluation suite");
  eval_cmd->require_subcommand(1);
  EvalErrorsArgs eval_errors_args;
  CLI::App* eval_errors =
      eval_cmd->add_subcommand("errors", "alignment-based error counts");
  eval_errors->add_option("--ref", eval_errors_args.ref, "reference text")
      ->required();
  eval_errors->add_option("--hyp", eval_errors_args.hyp, "hypothesis text")
      ->required();
  eval_errors->add_option("--json", eval_errors_args.json_out,
                          "machine-readable report path");
  eval_errors->add_flag("--trace", eval_errors_args.trace,
                        "print alignment traces");

  EvalMosArgs eval_mos_args;
  CLI::App* eval_mos = eval_cmd->add_subcommand("mos", "score aggregation");
  eval_mos->add_option("--ratings", eval_mos_args.ratings, "ratings file")
      ->required();
  eval_mos->add_option("--system", eval_mos_args.system,
                       "system id (default: all)");
  eval_mos->add_option("--ground-truth", eval_mos_args.ground_truth,
                       "ground-truth system id for DMOS");

  EvalSignificanceArgs eval_sig_args;
  CLI::App* eval_sig =
      eval_cmd->add_subcommand("significance", "two-sample t-test");
  eval_sig->add_option("--a", eval_sig_args.a, "sample A, one value per line")
      ->required();
  eval_sig->add_option("--b", eval_sig_args.b, "sample B, one value per line")
      ->required();
  eval_sig->add_flag("--paired", eval_sig_args.paired, "paired t-test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message naming the flag
    return 1;
  }

  try {
    if (*norm) return run_normalize(norm_args);
    if (*lm_train) return run_lm_train(lm_train_args);
    if (*lm_score) return run_lm_score(lm_score_args);
    if (*lm_export) return run_lm_export(lm_in, lm_out);
    if (*lm_import) return run_lm_import(lm_in);
    if (*split_cmd) return run_split(split_args);
    if (*g2p_cmd) return run_g2p(g2p_args);
    if (*labels_cmd) return run_labels(labels_args);
    if (*cluster_cmd) return run_cluster(cluster_args);
    if (*duration_cmd) return run_duration(duration_args);
    if (*synth_cmd) return run_synthesize(synth_args);
    if (*pipeline_run) return run_pipeline_cmd(pipeline_config,
                                               pipeline_workers);
    if (*eval_errors) return run_eval_errors(eval_errors_args);
    if (*eval_mos) return run_eval_mos(eval_mos_args);
    if (*eval_sig) return run_eval_significance(eval_sig_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand selected\n";
  return 1;
}
