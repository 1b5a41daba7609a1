#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dkc/cliques.hpp"

namespace dkc {

/// Handle of a clique inside a SolutionSet. Handles are never reused, so a
/// handle of a removed clique stays dead.
using SlotId = std::uint32_t;

/**
 * A set of pairwise disjoint k-cliques plus the node -> clique assignment.
 * Nodes without an assignment are free.
 */
class SolutionSet {
public:
  SolutionSet() = default;
  explicit SolutionSet(std::size_t node_count);

  std::size_t size() const noexcept { return live_count_; }
  bool empty() const noexcept { return live_count_ == 0; }
  std::size_t node_count() const noexcept { return owner_.size(); }

  bool is_free(NodeId u) const { return owner_[u] == kNoSlot; }
  std::optional<SlotId> owner(NodeId u) const;
  bool live(SlotId s) const { return s < live_.size() && live_[s]; }
  const Clique& clique(SlotId s) const { return slots_[s]; }
  std::size_t slot_capacity() const noexcept { return slots_.size(); }

  /// Throws std::invalid_argument if c overlaps an existing member.
  SlotId add(Clique c);
  Clique remove(SlotId s);
  bool disjoint_from_all(const Clique& c) const;

  /// Live slots in ascending order.
  std::vector<SlotId> slots() const;
  /// Live cliques in canonical order; two sets are equal iff these match.
  std::vector<Clique> sorted_cliques() const;

  /// Disjointness, assignment consistency and that every member is a k-clique of g.
  bool validate(const Graph& g, int k, std::string* why = nullptr) const;

private:
  static constexpr SlotId kNoSlot = static_cast<SlotId>(-1);

  std::vector<Clique> slots_;
  std::vector<std::uint8_t> live_;
  std::vector<SlotId> owner_;
  std::size_t live_count_ = 0;
};

/// One clique per line, members as external labels ascending, lines sorted.
void write_solution(std::ostream& out, const Graph& g, const SolutionSet& s);
/// Parses the format written by write_solution against g's labels.
SolutionSet read_solution(std::istream& in, const Graph& g);

}  // namespace dkc
