#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dkc {

/// Dense internal node index in [0, n).
using NodeId = std::uint32_t;
/// External node label as it appears in input files.
using Label = std::int64_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

/// Raised by the edge-list reader; carries the 1-based input line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/**
 * Undirected simple graph with sorted adjacency lists.
 *
 * Every node carries an external label. Labels are strictly ascending in
 * the internal id, so the canonical order of a node set is the same whether
 * it is compared by id or by label.
 */
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Builds a graph on nodes [0, n); self-loops and repeated pairs are dropped.
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t m() const noexcept { return m_; }
  std::size_t degree(NodeId u) const { return adj_[u].size(); }
  std::size_t max_degree() const noexcept;
  std::span<const NodeId> neighbors(NodeId u) const { return adj_[u]; }
  bool has_edge(NodeId u, NodeId v) const;

  /// Returns true iff the graph changed. Throws std::invalid_argument on a
  /// self-loop and std::out_of_range on an unknown id.
  bool insert_edge(NodeId u, NodeId v);
  bool delete_edge(NodeId u, NodeId v);

  Label label(NodeId u) const { return labels_[u]; }
  std::optional<NodeId> find_label(Label label) const;
  /// Labels must be strictly ascending and one per node.
  void set_labels(std::vector<Label> labels);

  /// Checks symmetry, strict sortedness, loop-freedom and the edge count.
  bool validate(std::string* why = nullptr) const;

  /// "internal external" per line.
  void write_label_map(std::ostream& out) const;

  std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
  void check_pair(NodeId u, NodeId v) const;

  std::vector<std::vector<NodeId>> adj_;
  std::vector<Label> labels_;
  std::size_t m_ = 0;
};

/**
 * Reads whitespace separated "u v" pairs, one edge per line. Lines starting
 * with '#' or '%' are comments and extra columns (weights, timestamps) are
 * ignored. Labels are remapped to dense ids in ascending label order.
 */
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

enum class OrderingKind { natural, degree, node_score };

const char* to_string(OrderingKind kind);
std::optional<OrderingKind> parse_ordering_kind(const std::string& text);

/// Total order on the nodes; rank(u) is a permutation of [0, n).
class NodeOrdering {
public:
  NodeOrdering() = default;
  NodeOrdering(OrderingKind kind, std::vector<NodeId> nodes_by_rank);

  OrderingKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return order_.size(); }
  std::uint32_t rank(NodeId u) const { return rank_[u]; }
  NodeId node_at(std::uint32_t rank) const { return order_[rank]; }
  std::span<const NodeId> nodes_by_rank() const { return order_; }

private:
  OrderingKind kind_ = OrderingKind::natural;
  std::vector<NodeId> order_;
  std::vector<std::uint32_t> rank_;
};

/// Ranks ascend with the key (degree or score), ties by ascending id.
/// `scores` is required for OrderingKind::node_score and must have n entries.
NodeOrdering build_ordering(const Graph& g, OrderingKind kind,
                            std::span<const std::uint64_t> scores = {});

/**
 * DAG obtained by directing every edge from the higher-ranked endpoint to the
 * lower-ranked one. Out-lists are sorted by descending rank of the target.
 *
 * remove_node() invalidates lazily: the node's own lists are cleared and the
 * live out-degrees of its in-neighbors are decremented, but stale entries stay
 * in the in-neighbors' out-lists until compact() is called on them. Readers
 * must skip invalid targets (live_out() and out_degree() already do).
 */
class OrientedGraph {
public:
  OrientedGraph() = default;
  OrientedGraph(const Graph& g, NodeOrdering ordering);

  std::size_t n() const noexcept { return out_.size(); }
  const NodeOrdering& ordering() const noexcept { return ordering_; }
  std::uint32_t rank(NodeId u) const { return ordering_.rank(u); }

  bool valid(NodeId u) const { return valid_[u] != 0; }
  /// Raw out-list, possibly holding invalidated targets.
  std::span<const NodeId> out(NodeId u) const { return out_[u]; }
  std::size_t out_degree(NodeId u) const { return live_out_[u]; }
  std::vector<NodeId> live_out(NodeId u) const;
  std::size_t arc_count() const noexcept { return arcs_; }

  /// Idempotent.
  void remove_node(NodeId u);
  /// Drops invalidated targets from u's out-list.
  void compact(NodeId u);

private:
  NodeOrdering ordering_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::vector<std::uint32_t> live_out_;
  std::vector<std::uint8_t> valid_;
  std::size_t arcs_ = 0;
};

OrientedGraph orient(const Graph& g, NodeOrdering ordering);

}  // namespace dkc
