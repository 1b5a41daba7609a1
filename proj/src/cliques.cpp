#include "dkc/cliques.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rooted_search.hpp"

namespace dkc {

Clique::Clique(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("clique members must be distinct");
}

bool Clique::contains(NodeId u) const {
  return std::binary_search(members_.begin(), members_.end(), u);
}

bool Clique::intersects(const Clique& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

std::size_t CliqueHash::operator()(const Clique& c) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (NodeId u : c.members()) {
    h ^= u;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

bool is_clique(const Graph& g, std::span<const NodeId> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j] || !g.has_edge(nodes[i], nodes[j])) return false;
  return true;
}

CliqueScore clique_score(const Clique& c, const NodeScoreTable& table) {
  CliqueScore total = 0;
  for (NodeId u : c) total += table.node_score[u];
  return total;
}

void require_valid_k(int k) {
  if (k < 3) throw std::invalid_argument("k must be at least 3");
}

void for_each_clique(const OrientedGraph& og, int k,
                     const std::function<void(const Clique&)>& visitor) {
  require_valid_k(k);
  detail::RootedSearch search(og, k);
  std::vector<NodeId> buffer(static_cast<std::size_t>(k));
  Clique scratch;
  for (NodeId u = 0; u < og.n(); ++u) {
    search.for_each_leaf(u, [&](std::span<const NodeId> prefix,
                                std::span<const NodeId> last) {
      for (NodeId x : last) {
        std::copy(prefix.begin(), prefix.end(), buffer.begin());
        buffer.back() = x;
        scratch = Clique(buffer);
        visitor(scratch);
      }
    });
  }
}

namespace {

template <class Work>
void run_over_roots(std::size_t n, unsigned threads, Work&& work) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) {
    work(0u, std::size_t{0}, n);
    return;
  }
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (;;) {
        std::size_t begin = next.fetch_add(kChunk);
        if (begin >= n) break;
        work(t, begin, std::min(n, begin + kChunk));
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

NodeScoreTable compute_node_scores(const OrientedGraph& og, int k, unsigned threads) {
  require_valid_k(k);
  threads = std::max(1u, threads);
  std::vector<NodeScoreTable> partial(threads);
  for (auto& p : partial) p.node_score.assign(og.n(), 0);

  run_over_roots(og.n(), threads, [&](unsigned t, std::size_t begin, std::size_t end) {
    detail::RootedSearch search(og, k);
    auto& table = partial[t];
    for (std::size_t u = begin; u < end; ++u) {
      search.for_each_leaf(static_cast<NodeId>(u),
                           [&](std::span<const NodeId> prefix,
                               std::span<const NodeId> last) {
                             for (NodeId p : prefix) table.node_score[p] += last.size();
                             for (NodeId x : last) ++table.node_score[x];
                             table.tau += last.size();
                           });
    }
  });

  NodeScoreTable result = std::move(partial[0]);
  for (unsigned t = 1; t < threads; ++t) {
    result.tau += partial[t].tau;
    for (std::size_t u = 0; u < og.n(); ++u)
      result.node_score[u] += partial[t].node_score[u];
  }
  return result;
}

std::uint64_t count_cliques(const OrientedGraph& og, int k, unsigned threads) {
  return compute_node_scores(og, k, threads).tau;
}

std::optional<Clique> find_one(const OrientedGraph& og, int k, NodeId u) {
  require_valid_k(k);
  detail::RootedSearch search(og, k);
  return search.find_first(u);
}

std::optional<ScoredClique> find_min(const OrientedGraph& og, int k, NodeId u,
                                     const NodeScoreTable& table,
                                     FindMinOptions options) {
  require_valid_k(k);
  detail::RootedSearch search(og, k);
  return search.find_min(u, table.node_score, options);
}

}  // namespace dkc
