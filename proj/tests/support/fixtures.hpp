#pragma once

#include <sstream>
#include <string>

#include "dkc/graph.hpp"
#include "dkc/solution.hpp"

namespace fixtures {

// Nine nodes, fifteen edges, seven triangles:
// (1,3,6) (3,5,6) (5,6,8) (5,7,8) (7,8,9) (4,7,9) (2,4,9).
inline const char* kNineNodeText =
    "1 3\n1 6\n3 6\n3 5\n5 6\n5 8\n6 8\n5 7\n7 8\n7 9\n8 9\n4 7\n4 9\n2 4\n2 9\n";

// Triangles (1,2,3), (3,4,5), (9,10,11), path 5-6-7 and isolated node 8.
inline const char* kElevenNodeText =
    "1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n9 10\n9 11\n10 11\n5 6\n6 7\n8 8\n";

inline dkc::Graph parse(const std::string& text) {
  std::istringstream in(text);
  return dkc::load_edge_list(in);
}

inline dkc::Graph nine_node() { return parse(kNineNodeText); }
inline dkc::Graph eleven_node() { return parse(kElevenNodeText); }

/// Node id of external label l; labels are 1-based in both fixtures.
inline dkc::NodeId v(dkc::Label l) { return static_cast<dkc::NodeId>(l - 1); }

inline dkc::Clique tri(dkc::Label a, dkc::Label b, dkc::Label c) {
  return dkc::Clique{v(a), v(b), v(c)};
}

inline dkc::Graph complete(std::size_t n) {
  std::vector<std::pair<dkc::NodeId, dkc::NodeId>> edges;
  for (dkc::NodeId a = 0; a < n; ++a)
    for (dkc::NodeId b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return dkc::Graph::from_edges(n, edges);
}

}  // namespace fixtures
