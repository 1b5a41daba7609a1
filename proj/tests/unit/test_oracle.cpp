#include <doctest.h>

#include <random>

#include "dkc/oracle.hpp"
#include "dkc/solvers.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace dkc;
using fixtures::tri;
using fixtures::v;

namespace {

std::size_t index_of(const CliqueGraph& cg, const Clique& c) {
  auto it = std::lower_bound(cg.cliques.begin(), cg.cliques.end(), c);
  REQUIRE(it != cg.cliques.end());
  REQUIRE(*it == c);
  return static_cast<std::size_t>(it - cg.cliques.begin());
}

}  // namespace

TEST_CASE("clique graph of the nine-node graph") {
  Graph g = fixtures::nine_node();
  CliqueGraph cg = build_clique_graph(g, 3);
  CHECK(cg.size() == 7);
  std::size_t c1 = index_of(cg, tri(1, 3, 6));
  std::size_t c2 = index_of(cg, tri(3, 5, 6));
  std::size_t c3 = index_of(cg, tri(5, 6, 8));
  std::vector<std::uint32_t> expected = {static_cast<std::uint32_t>(c2),
                                         static_cast<std::uint32_t>(c3)};
  std::sort(expected.begin(), expected.end());
  CHECK(cg.overlap_adj[c1] == expected);
  CHECK(clique_degree(cg, c1) == 2);
  CHECK(clique_degree(cg, c3) == 4);
  CHECK_THROWS_AS(build_clique_graph(g, 3, 6), CapacityError);
}

TEST_CASE("clique graph of disjoint triangles") {
  Graph g = fixtures::parse("1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n");
  CliqueGraph cg = build_clique_graph(g, 3);
  CHECK(cg.size() == 2);
  CHECK(clique_degree(cg, 0) == 0);
  CHECK(clique_degree(cg, 1) == 0);
}

TEST_CASE("exact packing") {
  Graph g = fixtures::nine_node();
  SolutionSet s = exact_mis(build_clique_graph(g, 3));
  CHECK(s.size() == 3);
  CHECK(s.validate(g, 3));

  Graph k4 = fixtures::complete(4);
  CHECK(exact_mis(build_clique_graph(k4, 4)).size() == 1);
  CHECK(exact_mis(build_clique_graph(Graph(), 3)).empty());
}

TEST_CASE("exact packing timeout carries a valid incumbent") {
  std::mt19937_64 rng(17);
  Graph g = ref::random_graph(60, 0.35, rng);
  CliqueGraph cg = build_clique_graph(g, 3);
  try {
    SolutionSet s = exact_mis(cg, std::chrono::milliseconds(0));
    CHECK(s.validate(g, 3));  // finished before the first deadline check
  } catch (const TimeoutError& e) {
    CHECK(e.incumbent().validate(g, 3));
    CHECK(e.incumbent().size() > 0);
  }
}

TEST_CASE("score bounds") {
  Graph g = fixtures::nine_node();
  ScoreBoundsReport r = check_score_bounds(g, 3);
  REQUIRE(r.entries.size() == 7);
  const ScoreBoundEntry& c1 = r.entries[0];
  CHECK(c1.clique == tri(1, 3, 6));
  CHECK(c1.score == 6);
  CHECK(c1.degree == 2);
  CHECK(c1.lower == doctest::Approx(1.5));
  CHECK(c1.upper == 3);

  Graph lone = fixtures::parse("1 2\n2 3\n1 3\n");
  ScoreBoundsReport single = check_score_bounds(lone, 3);
  REQUIRE(single.entries.size() == 1);
  CHECK(single.entries[0].score == 3);
  CHECK(single.entries[0].degree == 0);
  CHECK(single.entries[0].upper == 0);
  CHECK(single.entries[0].lower == 0.0);
  CHECK(single.tight_upper == 1);
}

TEST_CASE("property: exact packing matches exhaustive search") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 6 + trial % 11;
    Graph g = ref::random_graph(n, 0.35 + 0.05 * (trial % 5), rng);
    int k = 3 + trial % 2;
    CliqueGraph cg = build_clique_graph(g, k);
    SolutionSet s = exact_mis(cg);
    REQUIRE(s.validate(g, k));
    REQUIRE(s.size() == ref::max_disjoint(g, k));
  }
}

TEST_CASE("property: clique degrees match pairwise overlap") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = ref::random_graph(14, 0.45, rng);
    CliqueGraph cg = build_clique_graph(g, 3);
    auto cliques = ref::all_cliques(g, 3);
    REQUIRE(ref::as_members(cg.cliques) == cliques);
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      std::size_t deg = 0;
      for (std::size_t j = 0; j < cliques.size(); ++j)
        if (i != j && ref::overlap(cliques[i], cliques[j])) ++deg;
      REQUIRE(clique_degree(cg, i) == deg);
    }
  }
}
