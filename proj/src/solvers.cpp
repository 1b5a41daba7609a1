#include "dkc/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <queue>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "rooted_search.hpp"

namespace dkc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void accept(OrientedGraph& og, SolutionSet& s, Clique c) {
  for (NodeId v : c) og.remove_node(v);
  s.add(std::move(c));
}

// Parallel map over roots; each worker owns a RootedSearch.
template <class PerRoot>
void parallel_roots(const OrientedGraph& og, int k, unsigned threads, PerRoot&& per_root) {
  threads = std::max(1u, threads);
  std::atomic<std::size_t> next{0};
  constexpr std::size_t kChunk = 64;
  auto worker = [&] {
    detail::RootedSearch search(og, k);
    for (;;) {
      std::size_t begin = next.fetch_add(kChunk);
      if (begin >= og.n()) break;
      std::size_t end = std::min(og.n(), begin + kChunk);
      for (std::size_t u = begin; u < end; ++u) per_root(search, static_cast<NodeId>(u));
    }
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace

MemoryGuardError::MemoryGuardError(std::uint64_t tau, std::uint64_t bytes, std::uint64_t cap)
    : std::runtime_error("materializing " + std::to_string(tau) + " cliques needs " +
                         std::to_string(bytes) + " bytes, cap is " + std::to_string(cap)),
      tau_(tau),
      bytes_(bytes) {}

SolutionSet solve_hg(const Graph& g, int k, const NodeOrdering& ordering) {
  require_valid_k(k);
  OrientedGraph og(g, ordering);
  SolutionSet s(g.n());
  detail::RootedSearch search(og, k);
  for (NodeId u : og.ordering().nodes_by_rank()) {
    if (!og.valid(u) || og.out_degree(u) < static_cast<std::size_t>(k - 1)) continue;
    if (auto c = search.find_first(u)) accept(og, s, std::move(*c));
  }
  return s;
}

SolutionSet solve_hg(const Graph& g, int k, OrderingKind kind) {
  if (kind == OrderingKind::node_score) {
    require_valid_k(k);
    auto table =
        compute_node_scores(orient(g, build_ordering(g, OrderingKind::degree)), k);
    return solve_hg(g, k, build_ordering(g, kind, table.node_score));
  }
  return solve_hg(g, k, build_ordering(g, kind));
}

std::uint64_t gc_bytes_needed(std::uint64_t tau, int k) {
  // members + score + sort index per clique
  return tau * (static_cast<std::uint64_t>(k) * sizeof(NodeId) + sizeof(CliqueScore) +
                sizeof(std::uint64_t));
}

SolutionSet solve_gc(const Graph& g, int k, GcOptions options, SolveStats* stats) {
  require_valid_k(k);
  auto t0 = Clock::now();
  OrientedGraph og = orient(g, build_ordering(g, OrderingKind::degree));
  NodeScoreTable table = compute_node_scores(og, k, options.threads);
  if (stats) {
    stats->tau = table.tau;
    stats->score_seconds = seconds_since(t0);
  }
  auto t1 = Clock::now();

  std::uint64_t bytes = gc_bytes_needed(table.tau, k);
  if (bytes > options.memory_cap_bytes)
    throw MemoryGuardError(table.tau, bytes, options.memory_cap_bytes);

  const std::size_t width = static_cast<std::size_t>(k);
  std::vector<NodeId> flat;
  flat.reserve(table.tau * width);
  std::vector<CliqueScore> score;
  score.reserve(table.tau);
  detail::RootedSearch search(og, k);
  for (NodeId u = 0; u < g.n(); ++u) {
    search.for_each_leaf(u, [&](std::span<const NodeId> prefix, std::span<const NodeId> last) {
      CliqueScore base = 0;
      for (NodeId p : prefix) base += table.node_score[p];
      for (NodeId x : last) {
        auto at = flat.size();
        flat.insert(flat.end(), prefix.begin(), prefix.end());
        flat.push_back(x);
        std::sort(flat.begin() + static_cast<long>(at), flat.end());
        score.push_back(base + table.node_score[x]);
      }
    });
  }

  std::vector<std::uint64_t> order(score.size());
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  auto members = [&](std::uint64_t i) { return flat.begin() + static_cast<long>(i * width); };
  if (options.ties == TieBreak::strict) {
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
      if (score[a] != score[b]) return score[a] < score[b];
      return std::lexicographical_compare(members(a), members(a) + static_cast<long>(width),
                                          members(b), members(b) + static_cast<long>(width));
    });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint64_t a, std::uint64_t b) { return score[a] < score[b]; });
  }

  SolutionSet s(g.n());
  for (std::uint64_t i : order) {
    auto first = members(i);
    bool disjoint = std::all_of(first, first + static_cast<long>(width),
                                [&](NodeId u) { return s.is_free(u); });
    if (disjoint)
      s.add(Clique(std::vector<NodeId>(first, first + static_cast<long>(width))));
  }
  if (stats) stats->solve_seconds = seconds_since(t1);
  return s;
}

SolutionSet solve_lp(const Graph& g, int k, LpOptions options, SolveStats* stats) {
  require_valid_k(k);
  auto t0 = Clock::now();
  NodeScoreTable table =
      compute_node_scores(orient(g, build_ordering(g, OrderingKind::degree)), k, options.threads);
  if (stats) {
    stats->tau = table.tau;
    stats->score_seconds = seconds_since(t0);
  }
  auto t1 = Clock::now();

  OrientedGraph og = orient(g, build_ordering(g, OrderingKind::node_score, table.node_score));
  const FindMinOptions find_options{options.pruning, options.ties};

  // HeapInit: every worker writes only the slot of its own root.
  std::vector<std::optional<ScoredClique>> local_min(g.n());
  parallel_roots(og, k, options.threads, [&](detail::RootedSearch& search, NodeId u) {
    local_min[u] = search.find_min(u, table.node_score, find_options);
  });

  const bool strict = options.ties == TieBreak::strict;
  auto later = [strict](const HeapEntry& a, const HeapEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    if (strict) return b.clique < a.clique;
    return a.sequence > b.sequence;
  };
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(later)> heap(later);
  std::uint64_t sequence = 0;
  for (NodeId u : og.ordering().nodes_by_rank()) {
    if (!local_min[u]) continue;
    heap.push(HeapEntry{std::move(local_min[u]->clique), local_min[u]->score, u, sequence++});
  }
  local_min.clear();
  local_min.shrink_to_fit();

  SolutionSet s(g.n());
  detail::RootedSearch search(og, k);
  std::uint64_t pops = 0, recomputations = 0;
  while (!heap.empty()) {
    HeapEntry top = heap.top();
    heap.pop();
    ++pops;
    if (s.disjoint_from_all(top.clique)) {
      accept(og, s, std::move(top.clique));
      continue;
    }
    NodeId owner = top.owner;
    if (!og.valid(owner) || og.out_degree(owner) < static_cast<std::size_t>(k - 1)) continue;
    og.compact(owner);
    if (auto fresh = search.find_min(owner, table.node_score, find_options)) {
      ++recomputations;
      heap.push(HeapEntry{std::move(fresh->clique), fresh->score, owner, sequence++});
    }
  }
  if (stats) {
    stats->solve_seconds = seconds_since(t1);
    stats->heap_pops = pops;
    stats->recomputations = recomputations;
  }
  return s;
}

bool verify_maximal(const Graph& g, int k, const SolutionSet& s) {
  require_valid_k(k);
  OrientedGraph og = orient(g, build_ordering(g, OrderingKind::natural));
  for (NodeId u = 0; u < g.n(); ++u)
    if (!s.is_free(u)) og.remove_node(u);
  detail::RootedSearch search(og, k);
  for (NodeId u = 0; u < g.n(); ++u)
    if (og.valid(u) && search.find_first(u)) return false;
  return true;
}

std::vector<std::size_t> greedy_by_local_score(std::span<const Clique> cliques) {
  std::unordered_map<NodeId, std::uint64_t> node_score;
  for (const Clique& c : cliques)
    for (NodeId u : c) ++node_score[u];
  std::vector<CliqueScore> score(cliques.size(), 0);
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (NodeId u : cliques[i]) score[i] += node_score[u];

  std::vector<std::size_t> order(cliques.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (score[a] != score[b]) return score[a] < score[b];
    return cliques[a] < cliques[b];
  });

  std::unordered_set<NodeId> used;
  std::vector<std::size_t> chosen;
  for (std::size_t i : order) {
    const Clique& c = cliques[i];
    if (std::any_of(c.begin(), c.end(), [&](NodeId u) { return used.count(u) != 0; }))
      continue;
    used.insert(c.begin(), c.end());
    chosen.push_back(i);
  }
  return chosen;
}

}  // namespace dkc
