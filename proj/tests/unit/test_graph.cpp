#include <doctest.h>

#include <sstream>

#include "dkc/graph.hpp"
#include "fixtures.hpp"

using namespace dkc;
using fixtures::v;

TEST_CASE("edge list parsing") {
  SUBCASE("duplicates and self-loops are dropped") {
    Graph g = fixtures::parse("1 2\n2 1\n1 1");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
  }
  SUBCASE("empty input is an empty graph") {
    Graph g = fixtures::parse("");
    CHECK(g.n() == 0);
    CHECK(g.m() == 0);
  }
  SUBCASE("comments and extra columns") {
    Graph g = fixtures::parse("% header\n# more\n10 20 1.5 99\n20 30\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.label(0) == 10);
    CHECK(g.find_label(30) == NodeId{2});
    CHECK_FALSE(g.find_label(15).has_value());
  }
  SUBCASE("malformed token reports its line") {
    try {
      fixtures::parse("1 2\n3 x\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(fixtures::parse("1\n"), ParseError);
  }
  SUBCASE("nine-node fixture") {
    Graph g = fixtures::nine_node();
    CHECK(g.n() == 9);
    CHECK(g.m() == 15);
    std::string why;
    CHECK(g.validate(&why));
  }
  SUBCASE("round trip") {
    Graph g = fixtures::nine_node();
    std::ostringstream out;
    write_edge_list(out, g);
    Graph h = fixtures::parse(out.str());
    CHECK(h.edges() == g.edges());
  }
}

TEST_CASE("edge updates") {
  Graph g = fixtures::eleven_node();
  const std::size_t m = g.m();
  CHECK_FALSE(g.insert_edge(v(1), v(2)));
  CHECK(g.m() == m);
  CHECK_FALSE(g.delete_edge(v(1), v(7)));
  CHECK(g.m() == m);
  CHECK_THROWS_AS(g.insert_edge(v(3), v(3)), std::invalid_argument);
  CHECK_THROWS_AS(g.insert_edge(v(3), 99), std::out_of_range);

  CHECK_FALSE(g.has_edge(v(5), v(7)));
  CHECK(g.insert_edge(v(5), v(7)));
  CHECK(g.m() == m + 1);
  CHECK(g.has_edge(v(7), v(5)));
  CHECK(g.validate());
  CHECK(g.delete_edge(v(7), v(5)));
  CHECK(g.m() == m);
  CHECK(g.validate());
}

TEST_CASE("orderings") {
  Graph g = fixtures::nine_node();
  SUBCASE("natural ordering is the identity") {
    NodeOrdering o = build_ordering(g, OrderingKind::natural);
    for (NodeId u = 0; u < 9; ++u) CHECK(o.rank(u) == u);
  }
  SUBCASE("equal degrees fall back to ids") {
    Graph k4 = fixtures::complete(4);
    NodeOrdering o = build_ordering(k4, OrderingKind::degree);
    for (NodeId u = 0; u < 4; ++u) CHECK(o.node_at(u) == u);
  }
  SUBCASE("degree ordering ascends with degree") {
    NodeOrdering o = build_ordering(g, OrderingKind::degree);
    for (std::uint32_t r = 1; r < 9; ++r)
      CHECK(g.degree(o.node_at(r - 1)) <= g.degree(o.node_at(r)));
  }
  SUBCASE("score ordering") {
    std::vector<std::uint64_t> scores = {1, 1, 2, 2, 3, 3, 3, 3, 3};
    NodeOrdering o = build_ordering(g, OrderingKind::node_score, scores);
    std::vector<NodeId> expected = {v(1), v(2), v(3), v(4), v(5), v(6), v(7), v(8), v(9)};
    auto got = o.nodes_by_rank();
    CHECK(std::vector<NodeId>(got.begin(), got.end()) == expected);
    CHECK_THROWS(build_ordering(g, OrderingKind::node_score));
  }
  SUBCASE("names") {
    CHECK(parse_ordering_kind("score") == OrderingKind::node_score);
    CHECK(parse_ordering_kind("natural") == OrderingKind::natural);
    CHECK_FALSE(parse_ordering_kind("random").has_value());
  }
}

TEST_CASE("oriented graph") {
  Graph g = fixtures::nine_node();
  OrientedGraph og = orient(g, build_ordering(g, OrderingKind::natural));
  CHECK(og.arc_count() == 15);
  CHECK(og.live_out(v(6)) == std::vector<NodeId>{v(5), v(3), v(1)});

  SUBCASE("single arc") {
    Graph e = Graph::from_edges(2, std::vector<std::pair<NodeId, NodeId>>{{0, 1}});
    OrientedGraph d = orient(e, build_ordering(e, OrderingKind::natural));
    CHECK(d.live_out(1) == std::vector<NodeId>{0});
    CHECK(d.live_out(0).empty());
  }
  SUBCASE("removing a clique leaves one node with two out-neighbors") {
    for (Label l : {3, 5, 6}) og.remove_node(v(l));
    og.remove_node(v(6));  // idempotent
    std::vector<NodeId> wide;
    for (NodeId u = 0; u < 9; ++u)
      if (og.valid(u) && og.out_degree(u) >= 2) wide.push_back(u);
    CHECK(wide == std::vector<NodeId>{v(9)});
    CHECK(og.live_out(v(8)) == std::vector<NodeId>{v(7)});
  }
  SUBCASE("removing an isolated node changes nothing") {
    Graph h = fixtures::eleven_node();
    OrientedGraph d = orient(h, build_ordering(h, OrderingKind::natural));
    std::vector<std::vector<NodeId>> before;
    for (NodeId u = 0; u < h.n(); ++u) before.push_back(d.live_out(u));
    d.remove_node(v(8));
    for (NodeId u = 0; u < h.n(); ++u) CHECK(d.live_out(u) == before[u]);
  }
  SUBCASE("removing everything") {
    for (NodeId u = 0; u < 9; ++u) og.remove_node(u);
    for (NodeId u = 0; u < 9; ++u) {
      CHECK(og.out_degree(u) == 0);
      og.compact(u);
      CHECK(og.out(u).empty());
    }
  }
}
