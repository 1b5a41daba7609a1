#pragma once

// Clique search grown from a single root of an oriented graph. Candidate sets
// are kept per depth and narrowed by merge-intersecting with out-lists, both
// sorted by descending rank. One instance per thread; the graph is only read.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "dkc/cliques.hpp"

namespace dkc::detail {

class RootedSearch {
public:
  RootedSearch(const OrientedGraph& og, int k)
      : og_(og), k_(k), levels_(static_cast<std::size_t>(k)), path_(static_cast<std::size_t>(k)) {}

  /// Calls leaf(prefix, last) for every (k-1)-node prefix rooted at u; each
  /// node of `last` completes one k-clique.
  template <class Leaf>
  void for_each_leaf(NodeId root, Leaf&& leaf) {
    if (!seed(root)) return;
    walk_all(1, leaf);
  }

  std::optional<Clique> find_first(NodeId root) {
    if (!seed(root)) return std::nullopt;
    if (!walk_first(1)) return std::nullopt;
    return Clique(std::vector<NodeId>(path_.begin(), path_.end()));
  }

  std::optional<ScoredClique> find_min(NodeId root, std::span<const std::uint64_t> score,
                                       FindMinOptions options) {
    if (!seed(root)) return std::nullopt;
    score_ = score;
    options_ = options;
    best_.reset();
    walk_min(1, score[root]);
    if (!best_) return std::nullopt;
    return ScoredClique{Clique(best_members_), *best_};
  }

private:
  bool seed(NodeId root) {
    if (!og_.valid(root) || og_.out_degree(root) < static_cast<std::size_t>(k_ - 1))
      return false;
    path_[0] = root;
    auto& first = levels_[1];
    first.clear();
    for (NodeId v : og_.out(root))
      if (og_.valid(v)) first.push_back(v);
    return first.size() >= static_cast<std::size_t>(k_ - 1);
  }

  // next = cands[from:] ∩ out(x); cands hold valid nodes only.
  void narrow(std::span<const NodeId> cands, NodeId x, std::vector<NodeId>& next) const {
    next.clear();
    auto out = og_.out(x);
    std::size_t i = 0, j = 0;
    while (i < cands.size() && j < out.size()) {
      auto ra = og_.rank(cands[i]);
      auto rb = og_.rank(out[j]);
      if (ra == rb) {
        next.push_back(cands[i]);
        ++i;
        ++j;
      } else if (ra > rb) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  template <class Leaf>
  void walk_all(std::size_t depth, Leaf& leaf) {
    const auto& cands = levels_[depth];
    std::size_t need = static_cast<std::size_t>(k_) - depth;
    if (need == 1) {
      leaf(std::span<const NodeId>(path_.data(), depth), std::span<const NodeId>(cands));
      return;
    }
    auto& next = levels_[depth + 1];
    for (std::size_t i = 0; i < cands.size(); ++i) {
      NodeId x = cands[i];
      if (og_.out_degree(x) < need - 1) continue;
      narrow(std::span<const NodeId>(cands).subspan(i + 1), x, next);
      if (next.size() < need - 1) continue;
      path_[depth] = x;
      walk_all(depth + 1, leaf);
    }
  }

  bool walk_first(std::size_t depth) {
    const auto& cands = levels_[depth];
    std::size_t need = static_cast<std::size_t>(k_) - depth;
    if (need == 1) {
      if (cands.empty()) return false;
      path_[depth] = cands.front();
      return true;
    }
    auto& next = levels_[depth + 1];
    for (std::size_t i = 0; i < cands.size(); ++i) {
      NodeId x = cands[i];
      if (og_.out_degree(x) < need - 1) continue;
      narrow(std::span<const NodeId>(cands).subspan(i + 1), x, next);
      if (next.size() < need - 1) continue;
      path_[depth] = x;
      if (walk_first(depth + 1)) return true;
    }
    return false;
  }

  void offer(std::size_t depth, NodeId x, CliqueScore total) {
    if (best_) {
      if (total > *best_) return;
      if (total == *best_) {
        if (options_.ties == TieBreak::relaxed) return;
        candidate_members_.assign(path_.begin(), path_.begin() + static_cast<long>(depth));
        candidate_members_.push_back(x);
        std::sort(candidate_members_.begin(), candidate_members_.end());
        if (!(candidate_members_ < best_members_)) return;
        best_members_.swap(candidate_members_);
        return;
      }
    }
    best_ = total;
    best_members_.assign(path_.begin(), path_.begin() + static_cast<long>(depth));
    best_members_.push_back(x);
    std::sort(best_members_.begin(), best_members_.end());
  }

  void walk_min(std::size_t depth, CliqueScore s_cur) {
    const auto& cands = levels_[depth];
    std::size_t need = static_cast<std::size_t>(k_) - depth;
    if (need == 1) {
      for (NodeId x : cands) offer(depth, x, s_cur + score_[x]);
      return;
    }
    auto& next = levels_[depth + 1];
    for (std::size_t i = 0; i < cands.size(); ++i) {
      NodeId x = cands[i];
      // At least one more member (score >= 1) follows, so reaching the
      // incumbent score here already rules the branch out.
      if (options_.pruning && best_ && s_cur + score_[x] >= *best_) continue;
      if (og_.out_degree(x) < need - 1) continue;
      narrow(std::span<const NodeId>(cands).subspan(i + 1), x, next);
      if (next.size() < need - 1) continue;
      path_[depth] = x;
      walk_min(depth + 1, s_cur + score_[x]);
    }
  }

  const OrientedGraph& og_;
  int k_;
  std::vector<std::vector<NodeId>> levels_;
  std::vector<NodeId> path_;

  std::span<const std::uint64_t> score_;
  FindMinOptions options_;
  std::optional<CliqueScore> best_;
  std::vector<NodeId> best_members_;
  std::vector<NodeId> candidate_members_;
};

}  // namespace dkc::detail
