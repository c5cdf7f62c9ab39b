// tests/test_splitter.cpp

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

#include <limits>
#include <random>

#include "oracles.hpp"
#include "ttskit/splitter.hpp"

using namespace ttskit;

namespace {

NgramModel toy_model() {
  NgramConfig cfg;
  cfg.order = 2;
  return NgramModel::train(
      {{"a", "b", "c"}, {"b", "c", "a"}, {"c", "a", "b"}}, cfg);
}

}  // namespace

TEST_CASE("threshold of negative infinity never splits") {
  NgramModel m = toy_model();
  SplitResult r =
      split(m, {"a", "b", "c", "a"}, -std::numeric_limits<double>::infinity());
  CHECK(r.segments.size() == 1);
  CHECK(r.split_points.empty());
  CHECK(r.flattened() == std::vector<std::string>{"a", "b", "c", "a"});
}

TEST_CASE("threshold zero splits after every interior word") {
  NgramModel m = toy_model();
  std::vector<std::string> sent = {"a", "b", "c", "a"};
  SplitResult r = split(m, sent, 0.0);
  CHECK(r.segments.size() == sent.size());
  CHECK(r.split_points.size() == sent.size() - 1);
  for (const auto& seg : r.segments) CHECK(seg.size() == 1);
  // Marker-adjacent bigrams never induce splits even at threshold 0.
  CHECK(r.split_points.front().index == 0);
  CHECK(r.split_points.back().index == sent.size() - 2);
}

TEST_CASE("single-token input yields one segment and no splits") {
  NgramModel m = toy_model();
  SplitResult r = split(m, {"a"}, 0.0);
  CHECK(r.segments.size() == 1);
  CHECK(r.split_points.empty());
  SplitResult empty = split(m, {}, 0.0);
  CHECK(empty.segments.empty());
  CHECK(empty.flattened().empty());
}

TEST_CASE("ties at the threshold do not split") {
  NgramModel m = toy_model();
  std::vector<std::string> sent = {"a", "b", "c"};
  std::vector<ScoredBigram> scores = m.score_bigrams(sent);
  double t = scores[1].log_likelihood;  // (a,b) exactly at threshold
  SplitResult r = split(m, sent, t);
  for (const auto& sp : r.split_points) {
    CHECK(sp.bigram.log_likelihood < t);
    CHECK(sp.index != 0);
  }
}

TEST_CASE("recorded split points sit below threshold and segments are valid") {
  NgramModel m = toy_model();
  std::mt19937 rng(4242);
  std::vector<std::string> vocab = {"a", "b", "c", "zz"};
  std::uniform_int_distribution<std::size_t> len(1, 12);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::uniform_real_distribution<double> thr(-6.0, 0.0);
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<std::string> sent;
    for (std::size_t i = 0, L = len(rng); i < L; ++i)
      sent.push_back(vocab[pick(rng)]);
    double t = thr(rng);
    SplitResult r = split(m, sent, t);
    // Partition invariant.
    CHECK(r.flattened() == sent);
    for (const auto& seg : r.segments) CHECK_FALSE(seg.empty());
    for (const auto& sp : r.split_points) {
      CHECK(sp.bigram.log_likelihood < t);
      CHECK(sp.bigram.left == sent[sp.index]);
    }
  }
}

TEST_CASE("raising the threshold never decreases split count") {
  NgramModel m = toy_model();
  std::vector<std::string> sent = {"a", "c", "b", "a", "zz", "c"};
  std::size_t prev = 0;
  for (double t : {-8.0, -4.0, -2.0, -1.0, -0.5, 0.0}) {
    std::size_t n = split(m, sent, t).split_points.size();
    CHECK(n >= prev);
    prev = n;
  }
}

TEST_CASE("synthesis plan preserves order and counts joins") {
  NgramModel m = toy_model();
  SplitResult one = split(m, {"a", "b"},
                          -std::numeric_limits<double>::infinity());
  SynthesisPlan p1 = plan_synthesis(one);
  CHECK(p1.segment_texts.size() == 1);
  CHECK(p1.join_count() == 0);

  SplitResult three = split(m, {"a", "b", "c"}, 0.0);
  REQUIRE(three.segments.size() == 3);
  SynthesisPlan p3 = plan_synthesis(three, 4);
  CHECK(p3.segment_texts.size() == 3);
  CHECK(p3.join_count() == 2);
  CHECK(p3.pause_frames == 4);

  // Joining plan texts with single spaces reproduces the sentence.
  CHECK(join(p3.segment_texts, " ") == "a b c");
}

TEST_CASE("threshold sweep reports histograms") {
  NgramModel m = toy_model();
  std::vector<std::vector<std::string>> sents = {{"a", "b", "c"},
                                                 {"c", "a", "b", "c"}};
  auto entries = sweep_thresholds(m, sents, {-10.0, 0.0});
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].split_count == 0);
  CHECK(entries[0].segment_count == 2);
  CHECK(entries[1].split_count == 5);
  CHECK(entries[1].segment_length_histogram.at(1) == 7);
  // Monotonicity across the sweep.
  CHECK(entries[0].split_count <= entries[1].split_count);
}
