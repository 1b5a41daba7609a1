#include <doctest.h>

#include <random>

#include "dkc/cliques.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace dkc;
using fixtures::tri;
using fixtures::v;

namespace {

std::vector<ref::Members> listed(const OrientedGraph& og, int k) {
  std::vector<ref::Members> out;
  for_each_clique(og, k, [&](const Clique& c) { out.emplace_back(c.begin(), c.end()); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("clique basics") {
  Clique c{5, 1, 3};
  CHECK(c[0] == 1);
  CHECK(c.contains(3));
  CHECK_FALSE(c.contains(2));
  CHECK(c.intersects(Clique{3, 7, 8}));
  CHECK_FALSE(c.intersects(Clique{2, 7, 8}));
  CHECK(Clique{1, 2, 3} < Clique{1, 2, 4});
  CHECK_THROWS_AS((Clique{1, 1, 2}), std::invalid_argument);
  CHECK(CliqueHash{}(Clique{1, 2, 3}) == CliqueHash{}(Clique{3, 2, 1}));
}

TEST_CASE("enumeration on the nine-node graph") {
  Graph g = fixtures::nine_node();
  OrientedGraph og = orient(g, build_ordering(g, OrderingKind::natural));
  std::vector<ref::Members> expected = {{0, 2, 5}, {1, 3, 8}, {2, 4, 5}, {3, 6, 8},
                                        {4, 5, 7}, {4, 6, 7}, {6, 7, 8}};
  CHECK(listed(og, 3) == expected);
  CHECK(count_cliques(og, 3) == 7);
  CHECK(count_cliques(og, 4) == 0);
  CHECK_THROWS_AS(count_cliques(og, 2), std::invalid_argument);
}

TEST_CASE("complete graphs") {
  Graph k5 = fixtures::complete(5);
  OrientedGraph og = orient(k5, build_ordering(k5, OrderingKind::degree));
  CHECK(count_cliques(og, 3) == 10);
  CHECK(count_cliques(og, 5) == 1);
  CHECK(count_cliques(og, 6) == 0);

  Graph k4 = fixtures::complete(4);
  NodeScoreTable t = compute_node_scores(orient(k4, build_ordering(k4, OrderingKind::degree)), 3);
  CHECK(t.node_score == std::vector<std::uint64_t>{3, 3, 3, 3});
  CHECK(t.tau == 4);
}

TEST_CASE("node and clique scores on the nine-node graph") {
  Graph g = fixtures::nine_node();
  OrientedGraph og = orient(g, build_ordering(g, OrderingKind::degree));
  NodeScoreTable t = compute_node_scores(og, 3);
  CHECK(t.node_score == std::vector<std::uint64_t>{1, 1, 2, 2, 3, 3, 3, 3, 3});
  CHECK(t.node_score == ref::node_scores(g, 3));
  CHECK(t.node_score[v(6)] == 3);
  CHECK(clique_score(tri(5, 6, 8), t) == 9);
  CHECK(clique_score(tri(1, 3, 6), t) == 6);

  Graph h = fixtures::eleven_node();
  NodeScoreTable th = compute_node_scores(orient(h, build_ordering(h, OrderingKind::degree)), 3);
  CHECK(th.node_score[v(8)] == 0);
  CHECK(clique_score(tri(9, 10, 11), th) == 3);
}

TEST_CASE("rooted search") {
  Graph g = fixtures::nine_node();
  OrientedGraph og = orient(g, build_ordering(g, OrderingKind::natural));
  CHECK(find_one(og, 3, v(6)) == tri(3, 5, 6));
  CHECK_FALSE(find_one(og, 3, v(2)).has_value());  // fewer than k-1 out-neighbors

  for (Label l : {3, 5, 6}) og.remove_node(v(l));
  CHECK(find_one(og, 3, v(9)) == tri(7, 8, 9));
  CHECK_FALSE(find_one(og, 3, v(8)).has_value());

  SUBCASE("minimum-score clique of a root") {
    OrientedGraph sg = orient(g, build_ordering(g, OrderingKind::degree));
    NodeScoreTable t = compute_node_scores(sg, 3);
    NodeOrdering by_score = build_ordering(g, OrderingKind::node_score, t.node_score);
    OrientedGraph dag = orient(g, by_score);
    // v6 is the highest-ranked member of (1,3,6); its rooted cliques are
    // (1,3,6) scoring 6 and (3,5,6) scoring 8.
    auto best = find_min(dag, 3, v(6), t);
    REQUIRE(best.has_value());
    CHECK(best->clique == tri(1, 3, 6));
    CHECK(best->score == 6);
    CHECK_FALSE(find_min(dag, 3, v(1), t).has_value());
  }
}

TEST_CASE("property: enumeration matches brute force under every ordering") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 5 + trial % 20;
    Graph g = ref::random_graph(n, 0.25 + 0.05 * (trial % 8), rng);
    for (int k = 3; k <= 5; ++k) {
      auto expected = ref::all_cliques(g, k);
      auto scores = ref::node_scores(g, k);
      for (OrderingKind kind :
           {OrderingKind::natural, OrderingKind::degree, OrderingKind::node_score}) {
        OrientedGraph og = orient(g, build_ordering(g, kind, scores));
        REQUIRE(listed(og, k) == expected);
        REQUIRE(count_cliques(og, k) == expected.size());
        REQUIRE(count_cliques(og, k, 3) == expected.size());
        NodeScoreTable t = compute_node_scores(og, k, 1 + trial % 4);
        REQUIRE(t.node_score == scores);
        REQUIRE(t.tau == expected.size());
      }
    }
  }
}

TEST_CASE("property: pruned and unpruned minimum search agree") {
  std::mt19937_64 rng(11);
  std::size_t compared = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = ref::random_graph(20, 0.3, rng);
    int k = 3 + trial % 3;
    auto scores = ref::node_scores(g, k);
    NodeScoreTable t{scores, 0};
    OrientedGraph og = orient(g, build_ordering(g, OrderingKind::node_score, scores));
    auto cliques = ref::all_cliques(g, k);
    for (NodeId u = 0; u < g.n(); ++u) {
      auto pruned = find_min(og, k, u, t, {true, TieBreak::strict});
      auto plain = find_min(og, k, u, t, {false, TieBreak::strict});
      REQUIRE(pruned.has_value() == plain.has_value());
      // Referee: minimum (score, lex) over cliques whose top-ranked member is u.
      std::optional<std::pair<std::uint64_t, ref::Members>> best;
      for (const auto& c : cliques) {
        NodeId top = *std::max_element(c.begin(), c.end(), [&](NodeId a, NodeId b) {
          return og.rank(a) < og.rank(b);
        });
        if (top != u) continue;
        std::uint64_t s = 0;
        for (NodeId x : c) s += scores[x];
        if (!best || std::make_pair(s, c) < *best) best = std::make_pair(s, c);
      }
      REQUIRE(best.has_value() == pruned.has_value());
      if (!best) continue;
      ++compared;
      REQUIRE(pruned->clique == plain->clique);
      REQUIRE(pruned->score == best->first);
      REQUIRE(ref::Members(pruned->clique.begin(), pruned->clique.end()) == best->second);
      auto relaxed = find_min(og, k, u, t, {true, TieBreak::relaxed});
      REQUIRE(relaxed.has_value());
      REQUIRE(relaxed->score == best->first);
    }
  }
  CHECK(compared > 1000);
}
