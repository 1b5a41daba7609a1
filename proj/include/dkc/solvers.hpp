#pragma once

#include <cstdint>
#include <stdexcept>

#include "dkc/cliques.hpp"
#include "dkc/solution.hpp"

namespace dkc {

/// Thrown by solve_gc when materializing every clique would exceed the
/// configured memory cap.
class MemoryGuardError : public std::runtime_error {
public:
  MemoryGuardError(std::uint64_t tau, std::uint64_t bytes, std::uint64_t cap);
  std::uint64_t tau() const noexcept { return tau_; }
  std::uint64_t bytes() const noexcept { return bytes_; }

private:
  std::uint64_t tau_;
  std::uint64_t bytes_;
};

/// Heap element of the lightweight solver: the local-minimum clique of the
/// root `owner`, which is its highest-ranked member.
struct HeapEntry {
  Clique clique;
  CliqueScore score = 0;
  NodeId owner = kNoNode;
  std::uint64_t sequence = 0;
};

/// Phase timings and counters for reporting.
struct SolveStats {
  std::uint64_t tau = 0;
  double score_seconds = 0;
  double solve_seconds = 0;
  std::uint64_t heap_pops = 0;
  std::uint64_t recomputations = 0;
};

/// Basic framework: scan roots in ascending rank and keep the first clique
/// found from each still-valid root.
SolutionSet solve_hg(const Graph& g, int k, const NodeOrdering& ordering);
SolutionSet solve_hg(const Graph& g, int k, OrderingKind kind = OrderingKind::degree);

inline constexpr std::uint64_t kDefaultGcCapBytes = 2ull << 30;

struct GcOptions {
  std::uint64_t memory_cap_bytes = kDefaultGcCapBytes;
  TieBreak ties = TieBreak::strict;
  unsigned threads = 1;
};

/// Stores every k-clique, sorts by clique score and accepts greedily.
SolutionSet solve_gc(const Graph& g, int k, GcOptions options = {},
                     SolveStats* stats = nullptr);

/// Bytes solve_gc would need to hold tau cliques of size k.
std::uint64_t gc_bytes_needed(std::uint64_t tau, int k);

struct LpOptions {
  bool pruning = true;
  unsigned threads = 1;
  TieBreak ties = TieBreak::strict;
};

/// Lightweight solver: one local-minimum clique per root in a min-heap,
/// recomputed lazily when it goes stale. With TieBreak::strict the result
/// equals solve_gc's.
SolutionSet solve_lp(const Graph& g, int k, LpOptions options = {},
                     SolveStats* stats = nullptr);

/// True iff no k-clique lies entirely on the free nodes of s.
bool verify_maximal(const Graph& g, int k, const SolutionSet& s);

/// Greedy disjoint selection over an explicit clique list, ordered by
/// ascending clique score where node scores count memberships within the
/// list itself. Returns indices into `cliques`.
std::vector<std::size_t> greedy_by_local_score(std::span<const Clique> cliques);

}  // namespace dkc
