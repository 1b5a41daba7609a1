#include "dkc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace dkc {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

Graph::Graph(std::size_t n) : adj_(n), labels_(n) {
  for (std::size_t i = 0; i < n; ++i) labels_[i] = static_cast<Label>(i);
}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) continue;
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t total = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    total += list.size();
  }
  g.m_ = total / 2;
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& list : adj_) d = std::max(d, list.size());
  return d;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= n() || v >= n()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  NodeId other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

void Graph::check_pair(NodeId u, NodeId v) const {
  if (u >= n() || v >= n()) throw std::out_of_range("node id out of range");
  if (u == v) throw std::invalid_argument("self-loop rejected");
}

bool Graph::insert_edge(NodeId u, NodeId v) {
  check_pair(u, v);
  auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) return false;
  a.insert(it, v);
  auto& b = adj_[v];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++m_;
  return true;
}

bool Graph::delete_edge(NodeId u, NodeId v) {
  check_pair(u, v);
  auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return false;
  a.erase(it);
  auto& b = adj_[v];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --m_;
  return true;
}

std::optional<NodeId> Graph::find_label(Label label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

void Graph::set_labels(std::vector<Label> labels) {
  if (labels.size() != n())
    throw std::invalid_argument("label count does not match node count");
  if (std::adjacent_find(labels.begin(), labels.end(),
                         [](Label a, Label b) { return a >= b; }) != labels.end())
    throw std::invalid_argument("labels must be strictly ascending");
  labels_ = std::move(labels);
}

bool Graph::validate(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::size_t total = 0;
  for (NodeId u = 0; u < n(); ++u) {
    const auto& list = adj_[u];
    total += list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      NodeId v = list[i];
      if (v >= n()) return fail("neighbor out of range at node " + std::to_string(u));
      if (v == u) return fail("self-loop at node " + std::to_string(u));
      if (i > 0 && list[i - 1] >= v)
        return fail("adjacency not strictly ascending at node " + std::to_string(u));
      if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u))
        return fail("asymmetric edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
  if (total != 2 * m_) return fail("edge count mismatch");
  return true;
}

void Graph::write_label_map(std::ostream& out) const {
  for (NodeId u = 0; u < n(); ++u) out << u << ' ' << labels_[u] << '\n';
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> result;
  result.reserve(m_);
  for (NodeId u = 0; u < n(); ++u)
    for (NodeId v : adj_[u])
      if (u < v) result.emplace_back(u, v);
  return result;
}

namespace {

bool parse_label(std::string_view token, Label& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<Label, Label>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#' || line[start] == '%') continue;
    std::istringstream fields(line.substr(start));
    std::string a, b;
    fields >> a >> b;
    if (b.empty()) throw ParseError(line_no, "expected two node labels");
    Label u = 0, v = 0;
    if (!parse_label(a, u)) throw ParseError(line_no, "malformed node label '" + a + "'");
    if (!parse_label(b, v)) throw ParseError(line_no, "malformed node label '" + b + "'");
    raw.emplace_back(u, v);
  }

  std::vector<Label> labels;
  labels.reserve(raw.size() * 2);
  for (auto [u, v] : raw) {
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto id_of = [&](Label l) {
    return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), l) -
                               labels.begin());
  };
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(id_of(u), id_of(v));

  Graph g = Graph::from_edges(labels.size(), edges);
  g.set_labels(std::move(labels));
  return g;
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

}  // namespace dkc
