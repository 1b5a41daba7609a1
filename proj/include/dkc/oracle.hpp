#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dkc/cliques.hpp"
#include "dkc/solution.hpp"

namespace dkc {

inline constexpr std::uint64_t kDefaultOracleCap = 200'000;
inline constexpr std::chrono::milliseconds kDefaultOracleBudget{60'000};

class CapacityError : public std::runtime_error {
public:
  CapacityError(std::uint64_t tau, std::uint64_t cap);
  std::uint64_t tau() const noexcept { return tau_; }
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t tau_;
  std::uint64_t cap_;
};

/// Carries the best disjoint set found before the budget ran out.
class TimeoutError : public std::runtime_error {
public:
  explicit TimeoutError(SolutionSet incumbent);
  const SolutionSet& incumbent() const noexcept { return incumbent_; }

private:
  SolutionSet incumbent_;
};

/// Every k-clique of G as a node; two cliques are adjacent iff they share a node.
struct CliqueGraph {
  std::size_t node_count = 0;  // nodes of the host graph
  int k = 0;
  std::vector<Clique> cliques;  // canonical order
  std::vector<std::vector<std::uint32_t>> overlap_adj;

  std::size_t size() const noexcept { return cliques.size(); }
};

/// Throws CapacityError if the graph has more than `cap` k-cliques.
CliqueGraph build_clique_graph(const Graph& g, int k, std::uint64_t cap = kDefaultOracleCap);

std::size_t clique_degree(const CliqueGraph& cg, std::size_t i);

/**
 * Maximum independent set of the clique graph, i.e. a maximum disjoint
 * k-clique set. Branch and bound on the highest-degree clique with
 * degree <= 1 folding; bounded by the node budget floor(covered / k) and a
 * greedy cover of the remaining cliques by shared host nodes. Seeded with the
 * score-ordered greedy. Throws TimeoutError once `budget` elapses.
 */
SolutionSet exact_mis(const CliqueGraph& cg,
                      std::chrono::milliseconds budget = kDefaultOracleBudget);

class ScoreBoundViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct ScoreBoundEntry {
  Clique clique;
  CliqueScore score = 0;
  std::size_t degree = 0;
  double lower = 0;  // (score - k) / (k - 1)
  std::uint64_t upper = 0;  // score - k
};

struct ScoreBoundsReport {
  std::vector<ScoreBoundEntry> entries;
  std::size_t tight_upper = 0;  // cliques with degree == score - k
};

/// Checks (s_c - k)/(k - 1) <= deg <= s_c - k for every clique; throws
/// ScoreBoundViolation naming the first offender.
ScoreBoundsReport check_score_bounds(const Graph& g, int k,
                                     std::uint64_t cap = kDefaultOracleCap);

}  // namespace dkc
