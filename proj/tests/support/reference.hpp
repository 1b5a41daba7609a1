#pragma once

// Test-side referees. Everything here works from the adjacency matrix and
// plain subset search so it shares no code path with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dkc/graph.hpp"
#include "dkc/solution.hpp"

namespace ref {

using dkc::Graph;
using dkc::NodeId;
using Members = std::vector<NodeId>;

inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.n(), std::vector<char>(g.n(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

/// All k-cliques, each ascending, in lexicographic order.
inline std::vector<Members> all_cliques(const Graph& g, int k) {
  auto a = adjacency_matrix(g);
  std::vector<Members> out;
  Members cur;
  auto rec = [&](auto&& self, NodeId from) -> void {
    if (cur.size() == static_cast<std::size_t>(k)) {
      out.push_back(cur);
      return;
    }
    for (NodeId v = from; v < g.n(); ++v) {
      bool ok = std::all_of(cur.begin(), cur.end(), [&](NodeId u) { return a[u][v]; });
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<std::uint64_t> node_scores(const Graph& g, int k) {
  std::vector<std::uint64_t> s(g.n(), 0);
  for (const auto& c : all_cliques(g, k))
    for (NodeId u : c) ++s[u];
  return s;
}

inline bool overlap(const Members& a, const Members& b) {
  for (NodeId u : a)
    if (std::find(b.begin(), b.end(), u) != b.end()) return true;
  return false;
}

/// Clique-score ordered greedy: sort by (sum of node scores, lexicographic),
/// accept each clique disjoint from those already accepted.
inline std::vector<Members> score_greedy(const Graph& g, int k) {
  auto cliques = all_cliques(g, k);
  auto s = node_scores(g, k);
  std::vector<std::pair<std::uint64_t, Members>> keyed;
  for (auto& c : cliques) {
    std::uint64_t total = 0;
    for (NodeId u : c) total += s[u];
    keyed.emplace_back(total, c);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<char> used(g.n(), 0);
  std::vector<Members> picked;
  for (auto& [score, c] : keyed) {
    if (std::any_of(c.begin(), c.end(), [&](NodeId u) { return used[u]; })) continue;
    for (NodeId u : c) used[u] = 1;
    picked.push_back(c);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

/// Maximum number of pairwise disjoint k-cliques by exhaustive search.
inline std::size_t max_disjoint(const Graph& g, int k) {
  auto cliques = all_cliques(g, k);
  std::vector<char> used(g.n(), 0);
  std::size_t best = 0, cur = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (cur > best) best = cur;
    if (i == cliques.size()) return;
    std::size_t free_nodes = static_cast<std::size_t>(std::count(used.begin(), used.end(), 0));
    if (cur + std::min(cliques.size() - i, free_nodes / k) <= best) return;
    const auto& c = cliques[i];
    if (std::none_of(c.begin(), c.end(), [&](NodeId u) { return used[u]; })) {
      for (NodeId u : c) used[u] = 1;
      ++cur;
      self(self, i + 1);
      --cur;
      for (NodeId u : c) used[u] = 0;
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return best;
}

inline bool is_maximal(const Graph& g, int k, const dkc::SolutionSet& s) {
  for (const auto& c : all_cliques(g, k))
    if (std::all_of(c.begin(), c.end(), [&](NodeId u) { return s.is_free(u); })) return false;
  return true;
}

/// (anchor clique, candidate) pairs: cliques with at least one free node whose
/// non-free nodes all lie in one solution clique, excluding that clique itself.
inline std::vector<std::pair<Members, Members>> candidate_filter(const Graph& g, int k,
                                                                 const dkc::SolutionSet& s) {
  std::vector<std::pair<Members, Members>> out;
  for (const auto& c : all_cliques(g, k)) {
    std::set<dkc::SlotId> owners;
    bool has_free = false;
    for (NodeId u : c) {
      if (auto o = s.owner(u))
        owners.insert(*o);
      else
        has_free = true;
    }
    if (!has_free || owners.size() != 1) continue;
    auto anchor = s.clique(*owners.begin()).members();
    out.emplace_back(Members(anchor.begin(), anchor.end()), c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline std::vector<Members> as_members(const std::vector<dkc::Clique>& cliques) {
  std::vector<Members> out;
  for (const auto& c : cliques) out.emplace_back(c.begin(), c.end());
  return out;
}

}  // namespace ref
