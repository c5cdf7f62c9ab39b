// ttskit/cluster_tree.hpp
//
// Top-down decision-tree clustering of full-context labels. Each internal
// node asks one phonetic yes-no question; leaves hold tied-state diagonal
// Gaussians. Routing answers questions for any syntactically valid label, so
// contexts never seen in training still reach a leaf.
//
// Split criterion: pooled single-Gaussian diagonal-covariance log-likelihood
//   L(S) = -0.5 * occ(S) * (d*log(2*pi*e) + sum_k log var_k(S))
// with per-dimension variances floored before the log. A node splits on the
// question maximizing L(yes) + L(no) - L(node), provided the gain strictly
// exceeds min_gain and both children carry at least min_occupancy; ties pick
// the earliest question in file order.

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

#ifndef TTSKIT_CLUSTER_TREE_HPP_
#define TTSKIT_CLUSTER_TREE_HPP_

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "ttskit/common.hpp"
#include "ttskit/context_stats.hpp"
#include "ttskit/questions.hpp"

namespace ttskit {

struct GrowOptions {
  double min_occupancy = 10.0;
  double min_gain = 0.0;       // strict > comparison
  double variance_floor = 1e-4;
};

inline double node_log_likelihood(const ContextStats& pooled,
                                  double variance_floor = 1e-4) {
  if (pooled.occupancy <= 0.0)
    throw DataError("cluster: log-likelihood of an empty stats pool");
  const double d = static_cast<double>(pooled.dim());
  double log_var_sum = 0.0;
  for (double v : pooled.variance())
    log_var_sum += std::log(std::max(v, variance_floor));
  return -0.5 * pooled.occupancy *
         (d * std::log(2.0 * std::numbers::pi * std::numbers::e) +
          log_var_sum);
}

struct TreeLeaf {
  double occupancy = 0.0;
  std::vector<double> mean;
  std::vector<double> variance;  // raw pooled variance, not floored
};

struct TreeNode {
  bool is_leaf = true;
  Question question;  // internal nodes only
  int yes_child = -1;
  int no_child = -1;
  TreeLeaf leaf;      // leaves only
};

class ClusterTree {
 public:
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  std::size_t dim() const { return dim_; }

  std::size_t leaf_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes_)
      if (node.is_leaf) ++n;
    return n;
  }

  // Total over all labels: every question is a set-membership test.
  int route(const FullContextLabel& label) const {
    int id = 0;
    while (!nodes_.at(id).is_leaf) {
      const TreeNode& node = nodes_[id];
      id = node.question.matches(label) ? node.yes_child : node.no_child;
    }
    return id;
  }

  const TreeLeaf& leaf_at(int id) const {
    const TreeNode& node = nodes_.at(id);
    if (!node.is_leaf) throw DataError("cluster: node is not a leaf");
    return node.leaf;
  }

  TreeLeaf& mutable_leaf_at(int id) {
    TreeNode& node = nodes_.at(id);
    if (!node.is_leaf) throw DataError("cluster: node is not a leaf");
    return node.leaf;
  }

  static ClusterTree grow(const StatsMap& stats, const QuestionSet& questions,
                          const GrowOptions& opts = GrowOptions()) {
    if (stats.empty()) throw DataError("cluster: no context stats");
    ClusterTree tree;
    std::vector<const LabeledStats*> items;
    items.reserve(stats.size());
    for (const auto& [key, ls] : stats) {
      if (!items.empty() && ls.stats.dim() != items.front()->stats.dim())
        throw DataError("cluster: stats dimension mismatch");
      items.push_back(&ls);
    }
    tree.dim_ = items.front()->stats.dim();
    tree.grow_node(items, questions, opts);
    return tree;
  }

  // ---------------------------------------------------------------------
  // Serialization:
  //   tree 1 <dim> <node_count>
  //   node <id> "<question>" <slot> <phones,csv> <yes> <no>
  //   leaf <id> <occupancy> <mean,csv> <variance,csv>
  // ---------------------------------------------------------------------

  std::string render() const {
    std::string out = "tree 1 " + std::to_string(dim_) + " " +
                      std::to_string(nodes_.size()) + "\n";
    auto csv = [](const std::vector<double>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_double(v[i]);
      }
      return s;
    };
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
      const TreeNode& node = nodes_[id];
      if (node.is_leaf) {
        out += "leaf " + std::to_string(id) + " " +
               format_double(node.leaf.occupancy) + " " +
               csv(node.leaf.mean) + " " + csv(node.leaf.variance) + "\n";
      } else {
        std::string phones;
        for (std::size_t i = 0; i < node.question.phone_list.size(); ++i) {
          if (i) phones += ',';
          phones += node.question.phone_list[i];
        }
        out += "node " + std::to_string(id) + " \"" + node.question.name +
               "\" " + slot_name(node.question.slot) + " " + phones + " " +
               std::to_string(node.yes_child) + " " +
               std::to_string(node.no_child) + "\n";
      }
    }
    return out;
  }

  void write_file(const std::filesystem::path& path) const {
    write_file_atomic(path, render());
  }

  static ClusterTree parse_file(const std::filesystem::path& path) {
    return parse_text(read_file_text(path), path.string());
  }

  static ClusterTree parse_text(const std::string& text,
                                const std::string& where) {
    ClusterTree tree;
    std::vector<std::string> lines = split_on(text, '\n');
    std::size_t lineno = 0;
    std::size_t declared_nodes = 0;
    bool saw_header = false;
    std::vector<bool> seen;
    auto parse_slot = [&](const std::string& s,
                          std::size_t ln) -> ContextSlot {
      if (s == "LL") return ContextSlot::kLL;
      if (s == "L") return ContextSlot::kL;
      if (s == "C") return ContextSlot::kC;
      if (s == "R") return ContextSlot::kR;
      if (s == "RR") return ContextSlot::kRR;
      throw ParseError(where, ln, 0, "unknown context slot '" + s + "'");
    };
    auto parse_csv = [&](const std::string& s, std::size_t ln) {
      std::vector<double> v;
      for (const std::string& part : split_on(s, ','))
        v.push_back(parse_double(part, where, ln));
      return v;
    };
    for (const std::string& raw : lines) {
      ++lineno;
      std::string_view line = trim(raw);
      if (line.empty() || line.front() == '#') continue;
      std::vector<std::string> f = split_whitespace(line);
      if (f[0] == "tree") {
        if (f.size() != 4 || f[1] != "1")
          throw ParseError(where, lineno, 0,
                           "expected 'tree 1 <dim> <node_count>'");
        tree.dim_ = static_cast<std::size_t>(parse_long(f[2], where, lineno));
        declared_nodes =
            static_cast<std::size_t>(parse_long(f[3], where, lineno));
        tree.nodes_.resize(declared_nodes);
        seen.assign(declared_nodes, false);
        saw_header = true;
      } else if (f[0] == "node") {
        if (!saw_header)
          throw ParseError(where, lineno, 0, "missing tree header");
        // Question names may contain spaces; re-extract the quoted part.
        std::size_t q1 = line.find('"');
        std::size_t q2 = q1 == std::string_view::npos
                             ? std::string_view::npos
                             : line.find('"', q1 + 1);
        if (q1 == std::string_view::npos || q2 == std::string_view::npos)
          throw ParseError(where, lineno, 0, "expected quoted question name");
        std::string name(line.substr(q1 + 1, q2 - q1 - 1));
        std::vector<std::string> tail =
            split_whitespace(line.substr(q2 + 1));
        if (tail.size() != 4)
          throw ParseError(where, lineno, 0,
                           "expected '<slot> <phones> <yes> <no>'");
        std::size_t id =
            static_cast<std::size_t>(parse_long(f[1], where, lineno));
        if (id >= declared_nodes)
          throw ParseError(where, lineno, 0, "node id out of range");
        TreeNode node;
        node.is_leaf = false;
        node.question = make_question(name, parse_slot(tail[0], lineno),
                                      split_on(tail[1], ','));
        node.yes_child =
            static_cast<int>(parse_long(tail[2], where, lineno));
        node.no_child = static_cast<int>(parse_long(tail[3], where, lineno));
        if (node.yes_child <= static_cast<int>(id) ||
            node.no_child <= static_cast<int>(id) ||
            node.yes_child >= static_cast<int>(declared_nodes) ||
            node.no_child >= static_cast<int>(declared_nodes))
          throw ParseError(where, lineno, 0, "invalid child ids");
        if (seen[id])
          throw ParseError(where, lineno, 0, "duplicate node id");
        seen[id] = true;
        tree.nodes_[id] = std::move(node);
      } else if (f[0] == "leaf") {
        if (!saw_header)
          throw ParseError(where, lineno, 0, "missing tree header");
        if (f.size() != 5)
          throw ParseError(where, lineno, 0,
                           "expected 'leaf <id> <occ> <mean> <var>'");
        std::size_t id =
            static_cast<std::size_t>(parse_long(f[1], where, lineno));
        if (id >= declared_nodes)
          throw ParseError(where, lineno, 0, "leaf id out of range");
        TreeNode node;
        node.is_leaf = true;
        node.leaf.occupancy = parse_double(f[2], where, lineno);
        node.leaf.mean = parse_csv(f[3], lineno);
        node.leaf.variance = parse_csv(f[4], lineno);
        if (node.leaf.mean.size() != tree.dim_ ||
            node.leaf.variance.size() != tree.dim_)
          throw ParseError(where, lineno, 0, "leaf dimension mismatch");
        if (seen[id])
          throw ParseError(where, lineno, 0, "duplicate node id");
        seen[id] = true;
        tree.nodes_[id] = std::move(node);
      } else {
        throw ParseError(where, lineno, 0, "unknown directive '" + f[0] + "'");
      }
    }
    if (!saw_header) throw ParseError(where, lineno, 0, "missing tree header");
    for (std::size_t id = 0; id < declared_nodes; ++id)
      if (!seen[id])
        throw ParseError(where, lineno, 0,
                         "node " + std::to_string(id) + " missing from file");
    return tree;
  }

 private:
  int grow_node(const std::vector<const LabeledStats*>& items,
                const QuestionSet& questions, const GrowOptions& opts) {
    ContextStats pooled;
    for (const auto* ls : items) pooled.merge(ls->stats);
    double node_ll = node_log_likelihood(pooled, opts.variance_floor);

    const Question* best_question = nullptr;
    double best_gain = -std::numeric_limits<double>::infinity();
    std::vector<const LabeledStats*> best_yes, best_no;
    for (const Question& q : questions.questions) {
      std::vector<const LabeledStats*> yes_items, no_items;
      ContextStats yes_pool, no_pool;
      for (const auto* ls : items) {
        if (q.matches(ls->label)) {
          yes_items.push_back(ls);
          yes_pool.merge(ls->stats);
        } else {
          no_items.push_back(ls);
          no_pool.merge(ls->stats);
        }
      }
      if (yes_items.empty() || no_items.empty()) continue;
      if (yes_pool.occupancy < opts.min_occupancy ||
          no_pool.occupancy < opts.min_occupancy)
        continue;
      double gain = node_log_likelihood(yes_pool, opts.variance_floor) +
                    node_log_likelihood(no_pool, opts.variance_floor) -
                    node_ll;
      if (!best_question || gain > best_gain) {
        best_question = &q;
        best_gain = gain;
        best_yes = std::move(yes_items);
        best_no = std::move(no_items);
      }
    }

    int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    if (best_question && best_gain > opts.min_gain) {
      nodes_[id].is_leaf = false;
      nodes_[id].question = *best_question;
      int yes_id = grow_node(best_yes, questions, opts);
      int no_id = grow_node(best_no, questions, opts);
      nodes_[id].yes_child = yes_id;
      nodes_[id].no_child = no_id;
    } else {
      nodes_[id].is_leaf = true;
      nodes_[id].leaf.occupancy = pooled.occupancy;
      nodes_[id].leaf.mean = pooled.mean();
      nodes_[id].leaf.variance = pooled.variance();
    }
    return id;
  }

  std::vector<TreeNode> nodes_;  // preorder; node 0 is the root
  std::size_t dim_ = 0;
};

// Re-derives leaf Gaussians by routing raw stats through an existing tree
// (duration/acoustic model training over a shared tree).
inline void repool_leaves(ClusterTree* tree, const StatsMap& stats) {
  std::map<int, ContextStats> pooled;
  for (const auto& [key, ls] : stats)
    pooled[tree->route(ls.label)].merge(ls.stats);
  std::size_t leaves_seen = 0;
  for (std::size_t id = 0; id < tree->nodes().size(); ++id) {
    if (!tree->nodes()[id].is_leaf) continue;
    ++leaves_seen;
    auto it = pooled.find(static_cast<int>(id));
    if (it == pooled.end())
      throw DataError("cluster: internal error, leaf " + std::to_string(id) +
                      " received no stats");
    TreeLeaf& leaf = tree->mutable_leaf_at(static_cast<int>(id));
    leaf.occupancy = it->second.occupancy;
    leaf.mean = it->second.mean();
    leaf.variance = it->second.variance();
  }
  (void)leaves_seen;
}

}  // namespace ttskit

#endif  // TTSKIT_CLUSTER_TREE_HPP_
