#include <doctest.h>

#include "pmcsolve/errors.hpp"
#include "pmcsolve/oracle.hpp"
#include "pmcsolve/triangulation.hpp"
#include "support.hpp"

using namespace pmcsolve;
using testing::ids;

TEST_CASE("minimal separators of small graphs") {
  CHECK(enumerate_minimal_separators(path_graph(3)) == std::vector<VertexSet>{ids({2})});
  auto c4 = enumerate_minimal_separators(cycle_graph(4));
  CHECK(c4 == std::vector<VertexSet>{ids({1, 3}), ids({2, 4})});
  CHECK(enumerate_minimal_separators(complete_graph(4)).empty());
  CHECK(is_minimal_separator(cycle_graph(4), ids({1, 3})));
  CHECK_FALSE(is_minimal_separator(cycle_graph(4), ids({1, 2})));
  CHECK_FALSE(is_minimal_separator(path_graph(4), ids({2, 3})));
}

TEST_CASE("potential maximal cliques") {
  Graph c4 = cycle_graph(4);
  auto seps = enumerate_minimal_separators(c4);
  auto pmcs = enumerate_pmcs(c4, seps);
  CHECK(pmcs.size() == 4);
  for (const auto& p : pmcs) CHECK(p.size() == 3);
  CHECK(enumerate_pmcs(path_graph(3), enumerate_minimal_separators(path_graph(3))) ==
        std::vector<VertexSet>{ids({1, 2}), ids({2, 3})});
  CHECK(enumerate_pmcs(complete_graph(3), {}) == std::vector<VertexSet>{ids({1, 2, 3})});
  CHECK(is_pmc(c4, ids({1, 2, 3})));
  CHECK_FALSE(is_pmc(c4, ids({1, 2, 3, 4})));
  CHECK_FALSE(is_pmc(c4, ids({1, 3})));
}

TEST_CASE("enumerators agree with the oracles on random graphs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    Graph g = testing::random_connected(rng, 3 + static_cast<int>(rng() % 5), 0.4);
    auto seps = enumerate_minimal_separators(g);
    CHECK(seps == brute_force_separators(g));
    auto pmcs = enumerate_pmcs(g, seps);
    CHECK(pmcs == brute_force_pmcs(g));
    CHECK(pmcs.size() <= pmc_count_bound(g.n(), seps.size()));
  }
}

TEST_CASE("budgets abort instead of truncating") {
  Graph c6 = cycle_graph(6);
  CHECK_THROWS_AS(enumerate_minimal_separators(c6, 3), BudgetExceeded);
  auto seps = enumerate_minimal_separators(c6);
  CHECK_THROWS_AS(enumerate_pmcs(c6, seps, 5), BudgetExceeded);
  CHECK_THROWS_AS(build_skeleton(c6, {100, 5}), BudgetExceeded);
}

TEST_CASE("full blocks are ordered by size, root last") {
  Graph g = grid_graph(3, 3);
  auto seps = enumerate_minimal_separators(g);
  auto blocks = enumerate_full_blocks(g, seps);
  REQUIRE(!blocks.empty());
  CHECK(blocks.back().separator.empty());
  CHECK(blocks.back().component == g.vertices());
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    CHECK(blocks[i].vertices().size() <= blocks[i + 1].vertices().size());
    CHECK(g.neighborhood(blocks[i].component) == blocks[i].separator);
  }
}

TEST_CASE("good triples") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Graph g = testing::random_connected(rng, 7, 0.35);
    Skeleton sk = build_skeleton(g);
    CHECK(sk.good_triple_count() <= static_cast<std::size_t>(g.n()) * sk.pmcs.size() + sk.pmcs.size());
    for (std::size_t b = 0; b < sk.blocks.size(); ++b) {
      const FullBlock& bl = sk.blocks[b];
      for (const auto& tr : sk.triples[b]) {
        CHECK(bl.separator.is_subset_of(tr.pmc));
        CHECK(tr.pmc.is_subset_of(bl.vertices()));
        CHECK(is_pmc(g, tr.pmc));
        for (const auto& child : component_blocks(g, bl, tr.pmc)) {
          int idx = sk.block_index(child.component);
          CHECK(static_cast<std::size_t>(idx) < b);
          CHECK(child.separator.is_subset_of(tr.pmc));
        }
      }
    }
    // every PMC appears in the root's triples
    CHECK(sk.triples[sk.root()].size() == sk.pmcs.size());
  }
}

TEST_CASE("exact treewidth") {
  CHECK(exact_treewidth_small(Graph(0)) == -1);
  CHECK(exact_treewidth_small(Graph(3)) == 0);
  CHECK(exact_treewidth_small(path_graph(6)) == 1);
  CHECK(exact_treewidth_small(cycle_graph(6)) == 2);
  CHECK(exact_treewidth_small(complete_graph(5)) == 4);
  CHECK(exact_treewidth_small(grid_graph(3, 3)) == 3);
  CHECK_THROWS_AS(exact_treewidth_small(Graph(17)), SizeLimitExceeded);
}

TEST_CASE("elimination game and minimal triangulations") {
  Graph c4 = cycle_graph(4);
  std::vector<Vertex> order{0, 1, 2, 3};
  Graph h = elimination_game(c4, order);
  CHECK(h.is_chordal());
  CHECK(h.m() == 5);
  auto mins = minimal_triangulations_small(c4);
  CHECK(mins.size() == 2);
  for (const auto& t : mins) CHECK(t.is_chordal());
  CHECK(minimal_triangulations_small(path_graph(4)).size() == 1);
  CHECK(maximal_cliques_small(complete_graph(3)) == std::vector<VertexSet>{ids({1, 2, 3})});
}
