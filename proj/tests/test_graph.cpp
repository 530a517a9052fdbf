#include <doctest.h>

#include <sstream>

#include "pmcsolve/errors.hpp"
#include "pmcsolve/triangulation.hpp"
#include "support.hpp"

using namespace pmcsolve;
using testing::ids;

TEST_CASE("parse pace-gr") {
  Graph p3 = parse_graph("p tw 3 2\n1 2\n2 3\n");
  CHECK(p3 == path_graph(3));
  Graph c4 = parse_graph("c a comment\np tw 4 4\n1 2\n2 3\n3 4\n4 1\n");
  CHECK(c4 == cycle_graph(4));
  CHECK(c4.m() == 4);
}

TEST_CASE("parse errors name the line") {
  try {
    parse_graph("p tw 2 1\n1 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph("p tw 2 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p xx 2 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p tw 3 2\n1 2\n"), ParseError);
}

TEST_CASE("duplicate edges collapse") {
  Graph g = parse_graph("p tw 2 2\n1 2\n2 1\n");
  CHECK(g.m() == 1);
}

TEST_CASE("edge list infers n") {
  Graph g = parse_graph("# triangle plus pendant\n1 2\n2 3\n3 1\n3 4\n", GraphFormat::EdgeList);
  CHECK(g.n() == 4);
  CHECK(g.m() == 4);
}

TEST_CASE("pace-gr round trip") {
  Graph g = grid_graph(3, 3);
  CHECK(parse_graph(to_pace_gr(g)) == g);
}

TEST_CASE("neighborhood") {
  Graph p3 = path_graph(3);
  CHECK(p3.neighborhood(ids({2})) == ids({1, 3}));
  CHECK(p3.neighborhood(ids({1, 2, 3})).empty());
  CHECK(cycle_graph(4).neighborhood(ids({1})) == ids({2, 4}));
  CHECK_THROWS(p3.check_subset(ids({4})));
}

TEST_CASE("components") {
  auto comps = cycle_graph(4).components(ids({1, 3}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == ids({2}));
  CHECK(comps[1] == ids({4}));
  CHECK(path_graph(3).components().size() == 1);
  auto k4 = complete_graph(4).components(ids({1, 2, 4}));
  REQUIRE(k4.size() == 1);
  CHECK(k4[0] == ids({3}));
}

TEST_CASE("components partition the rest and are separated") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Graph g = testing::random_graph(rng, 9, 0.25);
    VertexSet ex = testing::random_subset(rng, 9);
    VertexSet seen;
    for (const auto& c : g.components(ex)) {
      CHECK_FALSE(c.intersects(seen));
      seen = seen | c;
      CHECK(g.induced(c).is_connected());
      CHECK(g.neighborhood(c).is_subset_of(ex));
    }
    CHECK(seen == g.vertices() - ex);
  }
}

TEST_CASE("is_clique") {
  CHECK(complete_graph(4).is_clique(ids({1, 2, 4})));
  CHECK_FALSE(cycle_graph(4).is_clique(ids({1, 3})));
  CHECK(cycle_graph(4).is_clique({}));
  CHECK(cycle_graph(4).is_clique(ids({2})));
}

TEST_CASE("generators") {
  CHECK(gen_graph({GraphKind::Cycle, 5}) == cycle_graph(5));
  GenParams gp;
  gp.kind = GraphKind::Gnp;
  gp.n = 10;
  gp.p = 0.3;
  gp.seed = 1;
  CHECK(gen_graph(gp) == gen_graph(gp));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenParams kt{GraphKind::KTree, 8};
    kt.k = 2;
    kt.seed = seed;
    Graph g = gen_graph(kt);
    CHECK(g.is_chordal());
    CHECK(exact_treewidth_small(g) == 2);
    GenParams iv{GraphKind::Interval, 12};
    iv.seed = seed;
    CHECK(gen_graph(iv).is_chordal());
  }
  CHECK(parse_gen_spec("gnp:n=10,p=0.3,seed=1").n == 10);
  CHECK_THROWS(parse_gen_spec("wheel:n=5"));
}

TEST_CASE("chordality") {
  CHECK(path_graph(5).is_chordal());
  CHECK_FALSE(cycle_graph(4).is_chordal());
  CHECK(complete_graph(5).is_chordal());
  CHECK_FALSE(grid_graph(2, 3).is_chordal());
}

TEST_CASE("vertex set order puts members first") {
  // the smallest element of the symmetric difference decides
  CHECK(ids({1, 2, 4, 5}) < ids({1, 2, 5, 6}));
  CHECK(ids({1, 3}) < ids({1}));
  CHECK(ids({1}) < VertexSet{});
  CHECK_FALSE(ids({2}) < ids({1}));
  // preserved under union with a set disjoint from both
  CHECK((ids({1, 3}) | ids({7})) < (ids({1}) | ids({7})));
}

TEST_CASE("induced renumbers") {
  std::vector<Vertex> orig;
  Graph h = cycle_graph(5).induced(ids({1, 2, 3}), &orig);
  CHECK(h == path_graph(3));
  CHECK(orig == std::vector<Vertex>{0, 1, 2});
}
