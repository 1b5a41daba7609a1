#include "dkc/graph.hpp"

#include <algorithm>
#include <numeric>

namespace dkc {

const char* to_string(OrderingKind kind) {
  switch (kind) {
    case OrderingKind::natural: return "natural";
    case OrderingKind::degree: return "degree";
    case OrderingKind::node_score: return "score";
  }
  return "?";
}

std::optional<OrderingKind> parse_ordering_kind(const std::string& text) {
  if (text == "natural") return OrderingKind::natural;
  if (text == "degree") return OrderingKind::degree;
  if (text == "score" || text == "node-score") return OrderingKind::node_score;
  return std::nullopt;
}

NodeOrdering::NodeOrdering(OrderingKind kind, std::vector<NodeId> nodes_by_rank)
    : kind_(kind), order_(std::move(nodes_by_rank)), rank_(order_.size(), 0) {
  std::vector<std::uint8_t> seen(order_.size(), 0);
  for (std::uint32_t r = 0; r < order_.size(); ++r) {
    NodeId u = order_[r];
    if (u >= order_.size() || seen[u])
      throw std::invalid_argument("ordering is not a permutation");
    seen[u] = 1;
    rank_[u] = r;
  }
}

NodeOrdering build_ordering(const Graph& g, OrderingKind kind,
                            std::span<const std::uint64_t> scores) {
  std::vector<NodeId> order(g.n());
  std::iota(order.begin(), order.end(), NodeId{0});
  switch (kind) {
    case OrderingKind::natural:
      break;
    case OrderingKind::degree:
      std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return g.degree(a) < g.degree(b);
      });
      break;
    case OrderingKind::node_score:
      if (scores.size() != g.n())
        throw std::invalid_argument("node-score ordering needs one score per node");
      std::stable_sort(order.begin(), order.end(),
                       [&](NodeId a, NodeId b) { return scores[a] < scores[b]; });
      break;
  }
  return NodeOrdering(kind, std::move(order));
}

OrientedGraph::OrientedGraph(const Graph& g, NodeOrdering ordering)
    : ordering_(std::move(ordering)),
      out_(g.n()),
      in_(g.n()),
      live_out_(g.n(), 0),
      valid_(g.n(), 1) {
  if (ordering_.size() != g.n())
    throw std::invalid_argument("ordering size does not match graph");
  for (NodeId u = 0; u < g.n(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (rank(u) > rank(v))
        out_[u].push_back(v);
      else
        in_[u].push_back(v);
    }
    auto by_rank_desc = [this](NodeId a, NodeId b) { return rank(a) > rank(b); };
    std::sort(out_[u].begin(), out_[u].end(), by_rank_desc);
    std::sort(in_[u].begin(), in_[u].end(), by_rank_desc);
    live_out_[u] = static_cast<std::uint32_t>(out_[u].size());
    arcs_ += out_[u].size();
  }
}

std::vector<NodeId> OrientedGraph::live_out(NodeId u) const {
  std::vector<NodeId> result;
  result.reserve(live_out_[u]);
  for (NodeId v : out_[u])
    if (valid_[v]) result.push_back(v);
  return result;
}

void OrientedGraph::remove_node(NodeId u) {
  if (!valid_[u]) return;
  valid_[u] = 0;
  arcs_ -= live_out_[u];
  // Out-neighbors still list u in their in-lists; in-lists are only read
  // here and invalid entries are skipped.
  out_[u].clear();
  out_[u].shrink_to_fit();
  live_out_[u] = 0;
  for (NodeId w : in_[u]) {
    if (!valid_[w]) continue;
    --live_out_[w];
    --arcs_;
  }
  in_[u].clear();
  in_[u].shrink_to_fit();
}

void OrientedGraph::compact(NodeId u) {
  auto& list = out_[u];
  if (list.size() == live_out_[u]) return;
  std::erase_if(list, [this](NodeId v) { return !valid_[v]; });
}

OrientedGraph orient(const Graph& g, NodeOrdering ordering) {
  return OrientedGraph(g, std::move(ordering));
}

}  // namespace dkc
