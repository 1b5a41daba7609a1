#include "dkc/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "dkc/solvers.hpp"

namespace dkc {

CapacityError::CapacityError(std::uint64_t tau, std::uint64_t cap)
    : std::runtime_error("clique graph would hold " + std::to_string(tau) +
                         " cliques, cap is " + std::to_string(cap)),
      tau_(tau),
      cap_(cap) {}

TimeoutError::TimeoutError(SolutionSet incumbent)
    : std::runtime_error("exact search exceeded its time budget"),
      incumbent_(std::move(incumbent)) {}

CliqueGraph build_clique_graph(const Graph& g, int k, std::uint64_t cap) {
  require_valid_k(k);
  OrientedGraph og = orient(g, build_ordering(g, OrderingKind::degree));
  std::uint64_t tau = count_cliques(og, k);
  if (tau > cap) throw CapacityError(tau, cap);

  CliqueGraph cg;
  cg.node_count = g.n();
  cg.k = k;
  cg.cliques.reserve(tau);
  for_each_clique(og, k, [&](const Clique& c) { cg.cliques.push_back(c); });
  std::sort(cg.cliques.begin(), cg.cliques.end());

  std::vector<std::vector<std::uint32_t>> containing(g.n());
  for (std::uint32_t i = 0; i < cg.cliques.size(); ++i)
    for (NodeId u : cg.cliques[i]) containing[u].push_back(i);

  cg.overlap_adj.assign(cg.cliques.size(), {});
  for (const auto& group : containing)
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        cg.overlap_adj[group[a]].push_back(group[b]);
        cg.overlap_adj[group[b]].push_back(group[a]);
      }
  for (auto& list : cg.overlap_adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return cg;
}

std::size_t clique_degree(const CliqueGraph& cg, std::size_t i) {
  return cg.overlap_adj.at(i).size();
}

namespace {

struct BudgetExceeded {};

class PackingSearch {
public:
  PackingSearch(const CliqueGraph& cg, std::chrono::milliseconds budget)
      : cg_(cg),
        deadline_(std::chrono::steady_clock::now() + budget),
        alive_(cg.size(), 1),
        degree_(cg.size()),
        cover_(cg.node_count, 0) {
    for (std::size_t i = 0; i < cg.size(); ++i) {
      degree_[i] = cg.overlap_adj[i].size();
      for (NodeId u : cg.cliques[i])
        if (cover_[u]++ == 0) ++covered_;
    }
    alive_count_ = cg.size();
  }

  void seed(std::vector<std::uint32_t> incumbent) { best_ = std::move(incumbent); }
  const std::vector<std::uint32_t>& best() const { return best_; }

  void run() { search(); }

private:
  void kill(std::uint32_t i) {
    alive_[i] = 0;
    --alive_count_;
    for (std::uint32_t j : cg_.overlap_adj[i])
      if (alive_[j]) --degree_[j];
    for (NodeId u : cg_.cliques[i])
      if (--cover_[u] == 0) --covered_;
    trail_.push_back(i);
  }

  void revive(std::uint32_t i) {
    alive_[i] = 1;
    ++alive_count_;
    std::size_t d = 0;
    for (std::uint32_t j : cg_.overlap_adj[i])
      if (alive_[j]) {
        ++degree_[j];
        ++d;
      }
    degree_[i] = d;
    for (NodeId u : cg_.cliques[i])
      if (cover_[u]++ == 0) ++covered_;
  }

  void take(std::uint32_t i) {
    current_.push_back(i);
    for (std::uint32_t j : cg_.overlap_adj[i])
      if (alive_[j]) kill(j);
    kill(i);
  }

  void undo_to(std::size_t trail_mark, std::size_t current_mark) {
    while (trail_.size() > trail_mark) {
      revive(trail_.back());
      trail_.pop_back();
    }
    current_.resize(current_mark);
  }

  std::size_t upper_bound() {
    std::size_t by_nodes = covered_ / static_cast<std::size_t>(cg_.k);
    std::size_t bound = std::min(alive_count_, by_nodes);
    if (bound + current_.size() <= best_.size()) return bound;

    // Cliques sharing a host node are pairwise adjacent, so grouping the
    // alive cliques by a shared node gives a clique cover of what is left.
    order_.clear();
    for (NodeId u = 0; u < cover_.size(); ++u)
      if (cover_[u] > 0) order_.push_back(u);
    std::sort(order_.begin(), order_.end(),
              [&](NodeId a, NodeId b) { return cover_[a] > cover_[b]; });
    grouped_.assign(cg_.size(), 0);
    std::size_t groups = 0, remaining = alive_count_;
    for (NodeId u : order_) {
      if (remaining == 0) break;
      bool used = false;
      for (std::uint32_t i : members_of(u)) {
        if (!alive_[i] || grouped_[i]) continue;
        grouped_[i] = 1;
        --remaining;
        used = true;
      }
      if (used) ++groups;
    }
    return std::min(bound, groups);
  }

  const std::vector<std::uint32_t>& members_of(NodeId u) {
    if (containing_.empty()) {
      containing_.resize(cg_.node_count);
      for (std::uint32_t i = 0; i < cg_.size(); ++i)
        for (NodeId v : cg_.cliques[i]) containing_[v].push_back(i);
    }
    return containing_[u];
  }

  void search() {
    if ((++visits_ & 1023u) == 0 && std::chrono::steady_clock::now() > deadline_)
      throw BudgetExceeded{};

    std::size_t trail_mark = trail_.size();
    std::size_t current_mark = current_.size();

    // Degree 0 and 1 cliques can always be taken.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::uint32_t i = 0; i < cg_.size(); ++i)
        if (alive_[i] && degree_[i] <= 1) {
          take(i);
          changed = true;
        }
    }

    if (alive_count_ == 0) {
      if (current_.size() > best_.size()) best_ = current_;
    } else if (current_.size() + upper_bound() > best_.size()) {
      std::uint32_t pick = 0;
      bool found = false;
      for (std::uint32_t i = 0; i < cg_.size(); ++i)
        if (alive_[i] && (!found || degree_[i] > degree_[pick])) {
          pick = i;
          found = true;
        }

      std::size_t t = trail_.size(), c = current_.size();
      take(pick);
      search();
      undo_to(t, c);

      kill(pick);
      search();
      undo_to(t, c);
    }
    undo_to(trail_mark, current_mark);
  }

  const CliqueGraph& cg_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::size_t> degree_;
  std::vector<std::uint32_t> cover_;
  std::size_t covered_ = 0;
  std::size_t alive_count_ = 0;
  std::vector<std::uint32_t> trail_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  std::vector<NodeId> order_;
  std::vector<std::uint8_t> grouped_;
  std::vector<std::vector<std::uint32_t>> containing_;
  std::uint64_t visits_ = 0;
};

SolutionSet to_solution(const CliqueGraph& cg, const std::vector<std::uint32_t>& picks) {
  SolutionSet s(cg.node_count);
  for (std::uint32_t i : picks) s.add(cg.cliques[i]);
  return s;
}

}  // namespace

SolutionSet exact_mis(const CliqueGraph& cg, std::chrono::milliseconds budget) {
  PackingSearch search(cg, budget);
  std::vector<std::uint32_t> seed;
  for (std::size_t i : greedy_by_local_score(cg.cliques))
    seed.push_back(static_cast<std::uint32_t>(i));
  search.seed(std::move(seed));
  try {
    search.run();
  } catch (const BudgetExceeded&) {
    throw TimeoutError(to_solution(cg, search.best()));
  }
  return to_solution(cg, search.best());
}

ScoreBoundsReport check_score_bounds(const Graph& g, int k, std::uint64_t cap) {
  CliqueGraph cg = build_clique_graph(g, k, cap);
  std::vector<std::uint64_t> node_score(g.n(), 0);
  for (const Clique& c : cg.cliques)
    for (NodeId u : c) ++node_score[u];

  ScoreBoundsReport report;
  report.entries.reserve(cg.size());
  const auto kk = static_cast<std::uint64_t>(k);
  for (std::size_t i = 0; i < cg.size(); ++i) {
    ScoreBoundEntry e;
    e.clique = cg.cliques[i];
    for (NodeId u : e.clique) e.score += node_score[u];
    e.degree = clique_degree(cg, i);
    e.upper = e.score - kk;
    e.lower = static_cast<double>(e.score - kk) / static_cast<double>(kk - 1);
    // lower bound compared exactly: (s - k) <= (k - 1) * deg
    bool lower_ok = e.score - kk <= (kk - 1) * e.degree;
    bool upper_ok = e.degree <= e.upper;
    if (!lower_ok || !upper_ok) {
      std::string name;
      for (NodeId u : e.clique) name += (name.empty() ? "" : ",") + std::to_string(g.label(u));
      throw ScoreBoundViolation("clique (" + name + ") has degree " + std::to_string(e.degree) +
                                " outside [" + std::to_string(e.lower) + ", " +
                                std::to_string(e.upper) + "]");
    }
    if (e.degree == e.upper) ++report.tight_upper;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace dkc
