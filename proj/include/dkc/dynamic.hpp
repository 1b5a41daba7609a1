#pragma once

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dkc/solution.hpp"
#include "dkc/solvers.hpp"

namespace dkc {

enum class UpdateKind { insert, remove };

struct UpdateOp {
  UpdateKind kind = UpdateKind::insert;
  NodeId u = kNoNode;
  NodeId v = kNoNode;
};

using CandId = std::uint32_t;

/**
 * Candidate cliques grouped by their anchor. A candidate is a k-clique with at
 * least one free node whose non-free nodes all belong to one solution clique,
 * the anchor. Lookups by member node are exact.
 */
class CandidateIndex {
public:
  explicit CandidateIndex(std::size_t node_count = 0) : by_node_(node_count) {}

  std::size_t size() const noexcept { return lookup_.size(); }
  std::optional<CandId> find(const Clique& c) const;
  bool contains(const Clique& c) const { return lookup_.count(c) != 0; }
  const Clique& candidate(CandId id) const { return pool_[id]; }
  SlotId anchor(CandId id) const { return anchor_[id]; }

  /// Candidates of one anchor, in canonical clique order.
  std::vector<CandId> of_anchor(SlotId anchor) const;
  /// Candidates containing u, ascending id.
  std::vector<CandId> touching(NodeId u) const;

  CandId insert(Clique c, SlotId anchor);
  void erase(CandId id);

  /// (anchor clique, candidate) pairs in canonical order.
  std::vector<std::pair<Clique, Clique>> snapshot(const SolutionSet& s) const;

private:
  std::vector<Clique> pool_;
  std::vector<SlotId> anchor_;
  std::vector<CandId> free_ids_;
  std::unordered_map<Clique, CandId, CliqueHash> lookup_;
  std::vector<std::unordered_set<CandId>> by_node_;
  std::unordered_map<SlotId, std::unordered_set<CandId>> by_anchor_;
};

/// From-scratch construction: for each solution clique C, every k-clique on
/// C plus its free neighbors other than C itself. Throws std::invalid_argument
/// if s is not maximal.
CandidateIndex build_candidate_index(const Graph& g, int k, const SolutionSet& s);

/// FIFO of solution cliques awaiting a swap attempt; a clique is queued at
/// most once at a time.
class SwapQueue {
public:
  void push(SlotId s);
  SlotId pop();
  bool empty() const noexcept { return queue_.empty(); }
  std::size_t size() const noexcept { return queue_.size(); }

private:
  std::deque<SlotId> queue_;
  std::unordered_set<SlotId> queued_;
};

struct DynamicStats {
  std::uint64_t swap_attempts = 0;
  std::uint64_t swaps = 0;
  std::uint64_t direct_additions = 0;
  std::uint64_t dissolved = 0;
};

/**
 * Keeps a maximal disjoint k-clique set and its candidate index in sync with a
 * graph under edge insertions and deletions. Single writer.
 */
class DynamicSolver {
public:
  /// `s` must be a valid maximal solution of g.
  DynamicSolver(Graph g, int k, SolutionSet s);
  static DynamicSolver from_lp(Graph g, int k, LpOptions options = {});

  const Graph& graph() const noexcept { return g_; }
  int k() const noexcept { return k_; }
  const SolutionSet& solution() const noexcept { return s_; }
  const CandidateIndex& index() const noexcept { return index_; }
  const DynamicStats& stats() const noexcept { return stats_; }

  /// Mutates the graph and runs the matching handler. Returns false when the
  /// edge was already present (insert) or absent (delete).
  bool insert_edge(NodeId u, NodeId v);
  bool delete_edge(NodeId u, NodeId v);
  bool apply(const UpdateOp& op);

  /// Handlers proper; the graph must already reflect the update.
  void apply_insert(NodeId u, NodeId v);
  void apply_delete(NodeId u, NodeId v);

  /// Processes q until empty. Each popped clique is replaced by a greedy
  /// disjoint subset of its candidates when that subset has two or more
  /// cliques.
  void try_swap(SwapQueue& q);

  /// Full consistency check: solution validity, maximality and index equal to
  /// a from-scratch rebuild.
  bool check(std::string* why = nullptr) const;

private:
  struct Refresh {
    std::vector<SlotId> gained;
    std::vector<Clique> all_free;
  };

  template <class Visit>
  void cliques_through(std::span<const NodeId> seed, Visit&& visit) const;
  template <class Visit>
  void extend(std::vector<NodeId>& path, std::span<const NodeId> cands, std::size_t need,
              std::optional<SlotId> anchor, Visit& visit) const;

  Refresh refresh(std::vector<NodeId> nodes);
  std::vector<SlotId> absorb(std::vector<Clique> all_free);
  void enqueue(SwapQueue& q, std::vector<SlotId> slots) const;

  Graph g_;
  int k_;
  SolutionSet s_;
  CandidateIndex index_;
  DynamicStats stats_;
};

struct ReplayOptions {
  /// Run DynamicSolver::check() after every op.
  bool verify = false;
};

struct OpError {
  std::size_t op = 0;
  std::string message;
};

struct ReplayMetrics {
  std::vector<std::uint64_t> latency_ns;
  std::vector<std::size_t> solution_size;
  std::vector<std::size_t> index_size;
  std::vector<OpError> errors;
  std::size_t applied = 0;
  std::size_t unchanged = 0;
  std::size_t verify_failures = 0;
};

/// Applies ops in order. Bad ops (unknown node, self-loop) are recorded in
/// `errors` and skipped.
ReplayMetrics replay(DynamicSolver& solver, std::span<const UpdateOp> ops,
                     ReplayOptions options = {});

struct LabeledUpdate {
  UpdateKind kind = UpdateKind::insert;
  Label u = 0;
  Label v = 0;
  std::size_t line = 0;
};

/// "+ u v" / "- u v" per line, '#' comments. Throws ParseError.
std::vector<LabeledUpdate> parse_update_stream(std::istream& in);
/// Maps labels to ids; unknown labels become kNoNode so replay reports them.
std::vector<UpdateOp> resolve_updates(const Graph& g, std::span<const LabeledUpdate> ops);
void write_update_stream(std::ostream& out, const Graph& g, std::span<const UpdateOp> ops);

}  // namespace dkc
