#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dkc/graph.hpp"

namespace dkc {

/// k distinct nodes stored in ascending id order; equality and ordering are
/// lexicographic over that canonical array.
class Clique {
public:
  Clique() = default;
  explicit Clique(std::vector<NodeId> members);
  Clique(std::initializer_list<NodeId> members)
      : Clique(std::vector<NodeId>(members)) {}

  std::span<const NodeId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(NodeId u) const;
  bool intersects(const Clique& other) const;
  NodeId operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const Clique&, const Clique&) = default;
  friend auto operator<=>(const Clique& a, const Clique& b) {
    return a.members_ <=> b.members_;
  }

private:
  std::vector<NodeId> members_;
};

struct CliqueHash {
  std::size_t operator()(const Clique& c) const noexcept;
};

/// True iff `nodes` are pairwise adjacent in g.
bool is_clique(const Graph& g, std::span<const NodeId> nodes);

using CliqueScore = std::uint64_t;

/// Per-node k-clique counts; sum of node_score == k * tau.
struct NodeScoreTable {
  std::vector<std::uint64_t> node_score;
  std::uint64_t tau = 0;
};

CliqueScore clique_score(const Clique& c, const NodeScoreTable& table);

/**
 * Streams every k-clique of the live part of `og` exactly once. Each clique
 * is grown from its highest-ranked member by repeatedly intersecting
 * out-lists. The Clique handed to the visitor is reused between calls.
 *
 * Throws std::invalid_argument for k < 3.
 */
void for_each_clique(const OrientedGraph& og, int k,
                     const std::function<void(const Clique&)>& visitor);

std::uint64_t count_cliques(const OrientedGraph& og, int k, unsigned threads = 1);

/// Counts k-cliques per node without storing them. Roots are split over
/// `threads` workers whose partial tables are summed.
NodeScoreTable compute_node_scores(const OrientedGraph& og, int k,
                                   unsigned threads = 1);

/// First k-clique found from root u in out-list order, or nothing. Only
/// cliques whose other members lie in N+(u) are considered.
std::optional<Clique> find_one(const OrientedGraph& og, int k, NodeId u);

enum class TieBreak {
  /// Equal scores resolved by canonical clique order.
  strict,
  /// First clique encountered wins.
  relaxed,
};

struct FindMinOptions {
  bool pruning = true;
  TieBreak ties = TieBreak::strict;
};

struct ScoredClique {
  Clique clique;
  CliqueScore score = 0;
};

/// Minimum-score k-clique among those rooted at u (u plus k-1 live
/// out-neighbors). Pruning never changes the result.
std::optional<ScoredClique> find_min(const OrientedGraph& og, int k, NodeId u,
                                     const NodeScoreTable& table,
                                     FindMinOptions options = {});

void require_valid_k(int k);

}  // namespace dkc
