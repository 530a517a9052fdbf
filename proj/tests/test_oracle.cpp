#include <doctest.h>

#include "pmcsolve/errors.hpp"
#include "pmcsolve/oracle.hpp"
#include "pmcsolve/triangulation.hpp"
#include "support.hpp"

using namespace pmcsolve;
using testing::ids;

namespace {

std::optional<Witness> brute(const Graph& g, const char* spec, OracleQuery q) {
  auto a = make_automaton(parse_property(spec));
  return brute_force_solve(g, *a, q);
}

}  // namespace

TEST_CASE("brute force solve") {
  CHECK(brute(cycle_graph(5), "independent-set", {0}).value().value == 2);
  CHECK(brute(cycle_graph(4), "forest", {1}).value().value == 3);
  OracleQuery q{1, Mode::Min, {}, ids({1, 4})};
  auto c = brute(cycle_graph(6), "connected:T=1,4", q);
  REQUIRE(c);
  CHECK(c->value == 4);
  CHECK(c->f == ids({1, 2, 3, 4}));
  auto m = brute(path_graph(6), "packing:H=K2", {1});
  REQUIRE(m);
  CHECK(m->f == ids({1, 2, 4, 5}));
  CHECK_THROWS_AS(brute(Graph(15), "true", {1}), SizeLimitExceeded);
}

TEST_CASE("brute force separators") {
  CHECK(brute_force_separators(path_graph(3)) == std::vector<VertexSet>{ids({2})});
  CHECK(brute_force_separators(cycle_graph(4)) == std::vector<VertexSet>{ids({1, 3}), ids({2, 4})});
  CHECK(brute_force_separators(complete_graph(4)).empty());
  CHECK_THROWS_AS(brute_force_separators(Graph(11)), SizeLimitExceeded);
}

TEST_CASE("brute force pmcs") {
  CHECK(brute_force_pmcs(path_graph(3)) == std::vector<VertexSet>{ids({1, 2}), ids({2, 3})});
  auto c4 = brute_force_pmcs(cycle_graph(4));
  CHECK(c4.size() == 4);
  CHECK(brute_force_pmcs(complete_graph(3)) == std::vector<VertexSet>{ids({1, 2, 3})});
  CHECK_THROWS_AS(brute_force_pmcs(Graph(10)), SizeLimitExceeded);
}

TEST_CASE("oracle pmcs pass is_pmc and vice versa") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    Graph g = testing::random_connected(rng, 6, 0.4);
    auto pmcs = brute_force_pmcs(g);
    for (const auto& p : pmcs) CHECK(is_pmc(g, p));
    std::size_t passing = 0;
    for (std::uint32_t m = 1; m < (1u << g.n()); ++m) {
      VertexSet s;
      for (int v = 0; v < g.n(); ++v)
        if ((m >> v) & 1u) s.insert(v);
      passing += is_pmc(g, s);
    }
    CHECK(passing == pmcs.size());
  }
}

TEST_CASE("triangulation extension") {
  CHECK(check_triangulation_extension(cycle_graph(4), ids({1, 2, 3})));
  Graph chordal = gen_graph({GraphKind::KTree, 7, 0, 0, 0.5, 2, 0, 3});
  CHECK(check_triangulation_extension(chordal, chordal.vertices()));
  Graph c5 = cycle_graph(5);
  for (int drop = 1; drop <= 5; ++drop) CHECK(check_triangulation_extension(c5, c5.vertices() - ids({drop})));
  CHECK_THROWS_AS(check_triangulation_extension(Graph(9), {}), SizeLimitExceeded);
}

TEST_CASE("terminal treewidth") {
  auto single = check_terminal_treewidth(cycle_graph(5), ids({3}));
  CHECK(single.ok);
  CHECK(single.max_treewidth == 0);
  auto c6 = check_terminal_treewidth(cycle_graph(6), ids({1, 4}));
  CHECK(c6.ok);
  CHECK(c6.connectors == 2);
  CHECK(c6.max_treewidth == 1);
  auto grid = check_terminal_treewidth(grid_graph(3, 3), ids({1, 3, 7}));
  CHECK(grid.ok);
  CHECK(grid.max_treewidth <= 2);
}

TEST_CASE("verify sweeps and the negative control") {
  VerifyConfig cfg;
  cfg.instances = 4;
  cfg.max_n = 8;
  for (const auto& r : verify_corpus(cfg)) CHECK_MESSAGE(r.agree, std::string(r.instance + " " + r.check + " " + r.detail));
  cfg.inject_bug = true;
  bool any_disagree = false;
  for (const auto& r : verify_corpus(cfg)) any_disagree |= !r.agree;
  CHECK(any_disagree);
}
