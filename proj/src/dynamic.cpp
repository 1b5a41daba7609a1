#include "dkc/dynamic.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

namespace dkc {

namespace {

// out = sorted(a) ∩ sorted(b)
void intersect_sorted(std::span<const NodeId> a, std::span<const NodeId> b,
                      std::vector<NodeId>& out) {
  out.clear();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

// Every k-clique of the subgraph induced by `nodes` (sorted ascending).
template <class Visit>
void cliques_within(const Graph& g, std::span<const NodeId> nodes, int k, Visit&& visit) {
  std::vector<NodeId> path;
  std::vector<std::vector<NodeId>> levels(static_cast<std::size_t>(k) + 1);
  levels[0].assign(nodes.begin(), nodes.end());
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    const auto& cands = levels[depth];
    std::size_t need = static_cast<std::size_t>(k) - depth;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (cands.size() - i < need) break;
      path.push_back(cands[i]);
      if (need == 1) {
        visit(Clique(path));
      } else {
        intersect_sorted(std::span<const NodeId>(cands).subspan(i + 1),
                         g.neighbors(cands[i]), levels[depth + 1]);
        if (levels[depth + 1].size() >= need - 1) self(self, depth + 1);
      }
      path.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

// ---------------------------------------------------------------------------
// CandidateIndex

std::optional<CandId> CandidateIndex::find(const Clique& c) const {
  auto it = lookup_.find(c);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<CandId> CandidateIndex::of_anchor(SlotId anchor) const {
  std::vector<CandId> ids;
  auto it = by_anchor_.find(anchor);
  if (it == by_anchor_.end()) return ids;
  ids.assign(it->second.begin(), it->second.end());
  std::sort(ids.begin(), ids.end(),
            [this](CandId a, CandId b) { return pool_[a] < pool_[b]; });
  return ids;
}

std::vector<CandId> CandidateIndex::touching(NodeId u) const {
  std::vector<CandId> ids(by_node_[u].begin(), by_node_[u].end());
  std::sort(ids.begin(), ids.end());
  return ids;
}

CandId CandidateIndex::insert(Clique c, SlotId anchor) {
  if (contains(c)) throw std::invalid_argument("candidate already indexed");
  CandId id;
  if (!free_ids_.empty()) {
    id = free_ids_.back();
    free_ids_.pop_back();
    pool_[id] = std::move(c);
    anchor_[id] = anchor;
  } else {
    id = static_cast<CandId>(pool_.size());
    pool_.push_back(std::move(c));
    anchor_.push_back(anchor);
  }
  for (NodeId u : pool_[id]) by_node_[u].insert(id);
  by_anchor_[anchor].insert(id);
  lookup_.emplace(pool_[id], id);
  return id;
}

void CandidateIndex::erase(CandId id) {
  auto it = lookup_.find(pool_[id]);
  if (it == lookup_.end() || it->second != id) throw std::invalid_argument("unknown candidate");
  lookup_.erase(it);
  for (NodeId u : pool_[id]) by_node_[u].erase(id);
  auto a = by_anchor_.find(anchor_[id]);
  a->second.erase(id);
  if (a->second.empty()) by_anchor_.erase(a);
  pool_[id] = Clique();
  free_ids_.push_back(id);
}

std::vector<std::pair<Clique, Clique>> CandidateIndex::snapshot(const SolutionSet& s) const {
  std::vector<std::pair<Clique, Clique>> result;
  result.reserve(lookup_.size());
  for (const auto& [clique, id] : lookup_) {
    SlotId a = anchor_[id];
    result.emplace_back(s.live(a) ? s.clique(a) : Clique(), clique);
  }
  std::sort(result.begin(), result.end());
  return result;
}

CandidateIndex build_candidate_index(const Graph& g, int k, const SolutionSet& s) {
  require_valid_k(k);
  if (!verify_maximal(g, k, s))
    throw std::invalid_argument("candidate index needs a maximal solution");
  CandidateIndex index(g.n());
  std::vector<NodeId> region;
  for (SlotId slot : s.slots()) {
    const Clique& c = s.clique(slot);
    region.assign(c.begin(), c.end());
    for (NodeId u : c)
      for (NodeId w : g.neighbors(u))
        if (s.is_free(w)) region.push_back(w);
    std::sort(region.begin(), region.end());
    region.erase(std::unique(region.begin(), region.end()), region.end());
    cliques_within(g, region, k, [&](Clique found) {
      if (found != c) index.insert(std::move(found), slot);
    });
  }
  return index;
}

// ---------------------------------------------------------------------------
// SwapQueue

void SwapQueue::push(SlotId s) {
  if (queued_.insert(s).second) queue_.push_back(s);
}

SlotId SwapQueue::pop() {
  SlotId s = queue_.front();
  queue_.pop_front();
  queued_.erase(s);
  return s;
}

// ---------------------------------------------------------------------------
// DynamicSolver

DynamicSolver::DynamicSolver(Graph g, int k, SolutionSet s)
    : g_(std::move(g)), k_(k), s_(std::move(s)) {
  require_valid_k(k);
  std::string why;
  if (!s_.validate(g_, k_, &why)) throw std::invalid_argument("invalid solution: " + why);
  index_ = build_candidate_index(g_, k_, s_);
}

DynamicSolver DynamicSolver::from_lp(Graph g, int k, LpOptions options) {
  SolutionSet s = solve_lp(g, k, options);
  return DynamicSolver(std::move(g), k, std::move(s));
}

// Enumerates k-cliques containing every seed node whose non-free members share
// one solution clique. visit(clique, anchor) gets no anchor for all-free
// cliques; the solution clique itself is never reported.
template <class Visit>
void DynamicSolver::cliques_through(std::span<const NodeId> seed, Visit&& visit) const {
  std::optional<SlotId> anchor;
  for (NodeId x : seed) {
    if (auto o = s_.owner(x)) {
      if (anchor && *anchor != *o) return;
      anchor = o;
    }
  }
  std::vector<NodeId> cands(g_.neighbors(seed[0]).begin(), g_.neighbors(seed[0]).end());
  std::vector<NodeId> scratch;
  for (std::size_t i = 1; i < seed.size(); ++i) {
    intersect_sorted(cands, g_.neighbors(seed[i]), scratch);
    cands.swap(scratch);
  }
  std::erase_if(cands, [&](NodeId y) {
    auto o = s_.owner(y);
    return o && anchor && *o != *anchor;
  });
  std::size_t need = static_cast<std::size_t>(k_) - seed.size();
  if (cands.size() < need) return;
  std::vector<NodeId> path(seed.begin(), seed.end());
  extend(path, cands, need, anchor, visit);
}

template <class Visit>
void DynamicSolver::extend(std::vector<NodeId>& path, std::span<const NodeId> cands,
                           std::size_t need, std::optional<SlotId> anchor,
                           Visit& visit) const {
  std::vector<NodeId> next;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (cands.size() - i < need) break;
    NodeId y = cands[i];
    auto o = s_.owner(y);
    if (o && anchor && *o != *anchor) continue;
    std::optional<SlotId> here = anchor ? anchor : o;
    path.push_back(y);
    if (need == 1) {
      bool has_free = std::any_of(path.begin(), path.end(),
                                  [&](NodeId w) { return s_.is_free(w); });
      if (has_free) visit(Clique(path), here);
    } else {
      intersect_sorted(cands.subspan(i + 1), g_.neighbors(y), next);
      if (here && !anchor)
        std::erase_if(next, [&](NodeId w) {
          auto ow = s_.owner(w);
          return ow && *ow != *here;
        });
      if (next.size() >= need - 1) extend(path, next, need - 1, here, visit);
    }
    path.pop_back();
  }
}

DynamicSolver::Refresh DynamicSolver::refresh(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  std::unordered_map<Clique, SlotId, CliqueHash> previous;
  for (NodeId x : nodes)
    for (CandId id : index_.touching(x)) {
      previous.emplace(index_.candidate(id), index_.anchor(id));
      index_.erase(id);
    }

  Refresh result;
  std::unordered_set<Clique, CliqueHash> seen_free;
  for (NodeId x : nodes) {
    NodeId seed[1] = {x};
    cliques_through(seed, [&](Clique c, std::optional<SlotId> anchor) {
      if (!anchor) {
        if (seen_free.insert(c).second) result.all_free.push_back(std::move(c));
        return;
      }
      if (index_.contains(c)) return;
      auto before = previous.find(c);
      if (before == previous.end() || before->second != *anchor)
        result.gained.push_back(*anchor);
      index_.insert(std::move(c), *anchor);
    });
  }
  std::sort(result.gained.begin(), result.gained.end());
  result.gained.erase(std::unique(result.gained.begin(), result.gained.end()),
                      result.gained.end());
  std::sort(result.all_free.begin(), result.all_free.end());
  return result;
}

// Adds a greedy disjoint subset of all-free cliques until none is left.
std::vector<SlotId> DynamicSolver::absorb(std::vector<Clique> all_free) {
  std::vector<SlotId> gained;
  while (!all_free.empty()) {
    std::erase_if(all_free, [&](const Clique& c) { return !s_.disjoint_from_all(c); });
    if (all_free.empty()) break;
    std::vector<NodeId> touched;
    for (std::size_t i : greedy_by_local_score(all_free)) {
      touched.insert(touched.end(), all_free[i].begin(), all_free[i].end());
      s_.add(all_free[i]);
      ++stats_.direct_additions;
    }
    Refresh r = refresh(std::move(touched));
    gained.insert(gained.end(), r.gained.begin(), r.gained.end());
    all_free = std::move(r.all_free);
  }
  std::sort(gained.begin(), gained.end());
  gained.erase(std::unique(gained.begin(), gained.end()), gained.end());
  return gained;
}

void DynamicSolver::enqueue(SwapQueue& q, std::vector<SlotId> slots) const {
  std::sort(slots.begin(), slots.end());
  for (SlotId s : slots)
    if (s_.live(s)) q.push(s);
}

void DynamicSolver::try_swap(SwapQueue& q) {
  while (!q.empty()) {
    SlotId slot = q.pop();
    if (!s_.live(slot)) continue;
    ++stats_.swap_attempts;
    std::vector<Clique> cands;
    for (CandId id : index_.of_anchor(slot)) cands.push_back(index_.candidate(id));
    if (cands.size() < 2) continue;
    std::vector<std::size_t> picks = greedy_by_local_score(cands);
    if (picks.size() <= 1) continue;

    std::vector<NodeId> touched(s_.clique(slot).begin(), s_.clique(slot).end());
    s_.remove(slot);
    for (std::size_t i : picks) {
      touched.insert(touched.end(), cands[i].begin(), cands[i].end());
      s_.add(cands[i]);
    }
    ++stats_.swaps;
    Refresh r = refresh(std::move(touched));
    std::vector<SlotId> gained = std::move(r.gained);
    auto more = absorb(std::move(r.all_free));
    gained.insert(gained.end(), more.begin(), more.end());
    enqueue(q, std::move(gained));
  }
}

void DynamicSolver::apply_insert(NodeId u, NodeId v) {
  const bool free_u = s_.is_free(u);
  const bool free_v = s_.is_free(v);
  if (!free_u && !free_v) return;  // members of two solution cliques: no candidate can use the edge

  NodeId seed[2] = {u, v};
  if (free_u && free_v) {
    std::optional<Clique> first_free;
    std::vector<std::pair<Clique, SlotId>> found;
    cliques_through(seed, [&](Clique c, std::optional<SlotId> anchor) {
      if (!anchor) {
        if (!first_free) first_free = std::move(c);
      } else {
        found.emplace_back(std::move(c), *anchor);
      }
    });
    if (first_free) {
      std::vector<NodeId> touched(first_free->begin(), first_free->end());
      s_.add(std::move(*first_free));
      ++stats_.direct_additions;
      Refresh r = refresh(std::move(touched));
      absorb(std::move(r.all_free));
      return;
    }
    std::vector<SlotId> gained;
    for (auto& [c, anchor] : found) {
      if (index_.contains(c)) continue;
      index_.insert(std::move(c), anchor);
      gained.push_back(anchor);
    }
    SwapQueue q;
    enqueue(q, std::move(gained));
    try_swap(q);
    return;
  }

  // Exactly one free endpoint; every new candidate is anchored at the other
  // endpoint's clique.
  bool added = false;
  cliques_through(seed, [&](Clique c, std::optional<SlotId> anchor) {
    if (!anchor || index_.contains(c)) return;
    index_.insert(std::move(c), *anchor);
    added = true;
  });
  if (added) {
    SwapQueue q;
    q.push(*s_.owner(free_u ? v : u));
    try_swap(q);
  }
}

void DynamicSolver::apply_delete(NodeId u, NodeId v) {
  auto ou = s_.owner(u);
  auto ov = s_.owner(v);
  if (ou && ov && *ou == *ov) {
    Clique broken = s_.remove(*ou);
    ++stats_.dissolved;
    Refresh r = refresh(std::vector<NodeId>(broken.begin(), broken.end()));
    std::vector<SlotId> gained = std::move(r.gained);
    auto more = absorb(std::move(r.all_free));
    gained.insert(gained.end(), more.begin(), more.end());
    SwapQueue q;
    enqueue(q, std::move(gained));
    try_swap(q);
    return;
  }
  for (CandId id : index_.touching(u))
    if (index_.candidate(id).contains(v)) index_.erase(id);
}

bool DynamicSolver::insert_edge(NodeId u, NodeId v) {
  if (!g_.insert_edge(u, v)) return false;
  apply_insert(u, v);
  return true;
}

bool DynamicSolver::delete_edge(NodeId u, NodeId v) {
  if (!g_.delete_edge(u, v)) return false;
  apply_delete(u, v);
  return true;
}

bool DynamicSolver::apply(const UpdateOp& op) {
  return op.kind == UpdateKind::insert ? insert_edge(op.u, op.v) : delete_edge(op.u, op.v);
}

bool DynamicSolver::check(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::string detail;
  if (!g_.validate(&detail)) return fail("graph: " + detail);
  if (!s_.validate(g_, k_, &detail)) return fail("solution: " + detail);
  if (!verify_maximal(g_, k_, s_)) return fail("solution is not maximal");
  auto expected = build_candidate_index(g_, k_, s_).snapshot(s_);
  auto actual = index_.snapshot(s_);
  if (expected != actual)
    return fail("candidate index differs from rebuild (" + std::to_string(actual.size()) +
                " indexed, " + std::to_string(expected.size()) + " expected)");
  return true;
}

// ---------------------------------------------------------------------------
// Replay and stream format

ReplayMetrics replay(DynamicSolver& solver, std::span<const UpdateOp> ops,
                     ReplayOptions options) {
  ReplayMetrics metrics;
  metrics.latency_ns.reserve(ops.size());
  metrics.solution_size.reserve(ops.size());
  metrics.index_size.reserve(ops.size());
  const std::size_t n = solver.graph().n();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const UpdateOp& op = ops[i];
    if (op.u >= n || op.v >= n) {
      metrics.errors.push_back({i, "node out of range"});
      continue;
    }
    if (op.u == op.v) {
      metrics.errors.push_back({i, "self-loop"});
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    bool changed = solver.apply(op);
    auto elapsed = std::chrono::steady_clock::now() - start;
    metrics.latency_ns.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count()));
    if (changed)
      ++metrics.applied;
    else
      ++metrics.unchanged;
    metrics.solution_size.push_back(solver.solution().size());
    metrics.index_size.push_back(solver.index().size());
    if (options.verify) {
      std::string why;
      if (!solver.check(&why)) {
        ++metrics.verify_failures;
        metrics.errors.push_back({i, "verification failed: " + why});
      }
    }
  }
  return metrics;
}

std::vector<LabeledUpdate> parse_update_stream(std::istream& in) {
  std::vector<LabeledUpdate> ops;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line.substr(start));
    std::string sign;
    LabeledUpdate op;
    op.line = line_no;
    if (!(fields >> sign >> op.u >> op.v))
      throw ParseError(line_no, "expected '+ u v' or '- u v'");
    if (sign == "+")
      op.kind = UpdateKind::insert;
    else if (sign == "-")
      op.kind = UpdateKind::remove;
    else
      throw ParseError(line_no, "unknown update kind '" + sign + "'");
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
    ops.push_back(op);
  }
  return ops;
}

std::vector<UpdateOp> resolve_updates(const Graph& g, std::span<const LabeledUpdate> ops) {
  std::vector<UpdateOp> result;
  result.reserve(ops.size());
  for (const auto& op : ops)
    result.push_back({op.kind, g.find_label(op.u).value_or(kNoNode),
                      g.find_label(op.v).value_or(kNoNode)});
  return result;
}

void write_update_stream(std::ostream& out, const Graph& g, std::span<const UpdateOp> ops) {
  for (const auto& op : ops)
    out << (op.kind == UpdateKind::insert ? '+' : '-') << ' ' << g.label(op.u) << ' '
        << g.label(op.v) << '\n';
}

}  // namespace dkc
