#include "dkc/solution.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace dkc {

SolutionSet::SolutionSet(std::size_t node_count) : owner_(node_count, kNoSlot) {}

std::optional<SlotId> SolutionSet::owner(NodeId u) const {
  if (owner_[u] == kNoSlot) return std::nullopt;
  return owner_[u];
}

bool SolutionSet::disjoint_from_all(const Clique& c) const {
  return std::all_of(c.begin(), c.end(), [&](NodeId u) { return is_free(u); });
}

SlotId SolutionSet::add(Clique c) {
  for (NodeId u : c) {
    if (u >= owner_.size()) throw std::out_of_range("clique member out of range");
    if (!is_free(u)) throw std::invalid_argument("clique overlaps the solution");
  }
  auto s = static_cast<SlotId>(slots_.size());
  slots_.push_back(std::move(c));
  live_.push_back(1);
  for (NodeId u : slots_[s]) owner_[u] = s;
  ++live_count_;
  return s;
}

Clique SolutionSet::remove(SlotId s) {
  if (!live(s)) throw std::invalid_argument("slot is not live");
  Clique c = std::move(slots_[s]);
  slots_[s] = Clique();
  for (NodeId u : c) owner_[u] = kNoSlot;
  live_[s] = 0;
  --live_count_;
  return c;
}

std::vector<SlotId> SolutionSet::slots() const {
  std::vector<SlotId> result;
  result.reserve(live_count_);
  for (SlotId s = 0; s < slots_.size(); ++s)
    if (live_[s]) result.push_back(s);
  return result;
}

std::vector<Clique> SolutionSet::sorted_cliques() const {
  std::vector<Clique> result;
  result.reserve(live_count_);
  for (SlotId s = 0; s < slots_.size(); ++s)
    if (live_[s]) result.push_back(slots_[s]);
  std::sort(result.begin(), result.end());
  return result;
}

bool SolutionSet::validate(const Graph& g, int k, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (owner_.size() != g.n()) return fail("node count mismatch");
  std::vector<SlotId> seen(g.n(), kNoSlot);
  std::size_t live_seen = 0;
  for (SlotId s = 0; s < slots_.size(); ++s) {
    if (!live_[s]) continue;
    ++live_seen;
    const Clique& c = slots_[s];
    if (c.size() != static_cast<std::size_t>(k))
      return fail("clique of wrong size in slot " + std::to_string(s));
    if (!is_clique(g, c.members()))
      return fail("slot " + std::to_string(s) + " is not a clique of the graph");
    for (NodeId u : c) {
      if (seen[u] != kNoSlot) return fail("node " + std::to_string(u) + " used twice");
      seen[u] = s;
    }
  }
  if (live_seen != live_count_) return fail("live count mismatch");
  if (seen != owner_) return fail("assignment inconsistent with cliques");
  return true;
}

void write_solution(std::ostream& out, const Graph& g, const SolutionSet& s) {
  // Labels ascend with ids, so the canonical clique order is the label order.
  for (const Clique& c : s.sorted_cliques()) {
    bool first = true;
    for (NodeId u : c) {
      if (!first) out << ' ';
      out << g.label(u);
      first = false;
    }
    out << '\n';
  }
}

SolutionSet read_solution(std::istream& in, const Graph& g) {
  SolutionSet s(g.n());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::vector<NodeId> members;
    Label l = 0;
    while (fields >> l) {
      auto id = g.find_label(l);
      if (!id) throw ParseError(line_no, "unknown node label " + std::to_string(l));
      members.push_back(*id);
    }
    if (!fields.eof()) throw ParseError(line_no, "malformed clique line");
    s.add(Clique(std::move(members)));
  }
  return s;
}

}  // namespace dkc
