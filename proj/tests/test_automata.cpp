#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "pmcsolve/automata.hpp"
#include "pmcsolve/expression.hpp"
#include "pmcsolve/triangulation.hpp"
#include "support.hpp"

using namespace pmcsolve;
using testing::ids;

namespace {

Bag bag_of(const Graph& g, std::initializer_list<int> one_based) { return make_bag(g, ids(one_based)); }

std::unique_ptr<Automaton> automaton(const char* spec) { return make_automaton(parse_property(spec)); }

Graph edge() { return path_graph(2); }

}  // namespace

TEST_CASE("property syntax") {
  CHECK(parse_property("colorable:q=2").q == 2);
  CHECK(parse_property("max-degree:d=1").d == 1);
  auto c = parse_property("connected:T=1,4");
  CHECK(c.terminals == std::vector<Vertex>{0, 3});
  CHECK(c.to_string() == "connected:T=1,4");
  CHECK(parse_property("packing:H=K2+K3").family == std::vector<std::string>{"K2", "K3"});
  CHECK(parse_property("true:t=2").kind == PropertySpec::Kind::True);
  CHECK_THROWS(parse_property("minor:H=K4"));
  CHECK_THROWS(parse_property("colorable:q=0"));
  CHECK_THROWS(parse_property("packing:H=Q9"));
}

TEST_CASE("independent-set base classes") {
  auto a = automaton("independent-set");
  Bag w = bag_of(edge(), {1, 2});
  HClass one = a->base(w, 0b01);
  CHECK_FALSE(one.reject);
  CHECK(term(one, w) == ids({1}));
  CHECK(a->base(w, 0b11).reject);
}

TEST_CASE("forest base class of a single vertex") {
  auto a = automaton("forest");
  Bag w = bag_of(Graph(1), {1});
  HClass c = a->base(w, 0b1);
  CHECK_FALSE(c.reject);
  CHECK(c.payload.size() == 1);
  CHECK(a->base(w, 0b0).reject);  // forest needs X = F
}

TEST_CASE("forget") {
  auto is = automaton("independent-set");
  Graph g(2);
  Bag w2 = bag_of(g, {1, 2});
  Bag w1 = bag_of(g, {2});
  HClass c = is->forget(is->base(w2, 0b01), w2, w1);
  CHECK(c.members == 0);

  auto forest = automaton("forest");
  HClass f = forest->forget(forest->base(w2, 0b11), w2, w1);
  CHECK(f.payload.size() == 1);
}

TEST_CASE("connected rejects a second closed component") {
  auto a = automaton("connected");
  Graph g(2);
  Bag w2 = bag_of(g, {1, 2});
  Bag w1 = bag_of(g, {2});
  CHECK(a->forget(a->base(w2, 0b11), w2, w1).reject);
  // with an edge the forgotten vertex stays attached
  Bag e2 = bag_of(edge(), {1, 2});
  Bag e1 = bag_of(edge(), {2});
  CHECK_FALSE(a->forget(a->base(e2, 0b11), e2, e1).reject);
}

TEST_CASE("introduce") {
  auto is = automaton("independent-set");
  Graph g(2);
  Bag w = bag_of(g, {1, 2});
  Bag wi = bag_of(g, {2});
  HClass ci = is->base(wi, 0b1);
  auto glued = is->introduce(ci, wi, is->base(w, 0b11), w);
  REQUIRE(glued);
  CHECK(glued->members == 0b11);
  CHECK_FALSE(is->introduce(ci, wi, is->base(w, 0b01), w));  // membership clash
}

TEST_CASE("join") {
  auto is = automaton("independent-set");
  Graph g(2);
  Bag w = bag_of(g, {1, 2});
  HClass c = is->base(w, 0b10);
  CHECK(*is->join(c, c, w) == c);
  CHECK_FALSE(is->join(c, is->base(w, 0b01), w));

  // two private a-b paths over nonadjacent a, b: a cycle
  auto forest = automaton("forest");
  Graph p3 = path_graph(3);
  Bag ac = make_bag(p3, ids({1, 3}));
  Bag abc = make_bag(p3, ids({1, 2, 3}));
  HClass path = forest->forget(forest->base(abc, 0b111), abc, ac);
  CHECK(path.payload[0] == path.payload[1]);
  CHECK(forest->join(path, path, ac)->reject);

  auto conn = automaton("connected");
  HClass cp = conn->forget(conn->base(abc, 0b111), abc, ac);
  HClass apart = conn->base(ac, 0b11);
  auto merged = conn->join(apart, cp, ac);
  REQUIRE(merged);
  CHECK(*merged == cp);
}

TEST_CASE("accepting classes") {
  auto c3 = automaton("colorable:q=3");
  Bag empty;
  HClass root = c3->base(empty, 0);
  CHECK(accepts(*c3, root, empty));
  CHECK_FALSE(c3->accepting(HClass::rejected()));
  // K4 is not 3-colorable: every coloring of the bag dies
  Graph k4 = complete_graph(4);
  Bag all = make_bag(k4, k4.vertices());
  CHECK(c3->base(all, all.full()).reject);
}

TEST_CASE("reject is absorbing") {
  Graph p3 = path_graph(3);
  Bag w = make_bag(p3, ids({1, 2}));
  Bag w1 = make_bag(p3, ids({2}));
  for (const char* spec : {"true", "independent-set", "forest", "colorable:q=2", "max-degree:d=1",
                           "connected:T=1", "tree:T=1", "packing:H=K2"}) {
    auto a = automaton(spec);
    HClass r = HClass::rejected();
    CHECK(a->forget(r, w, w1).reject);
    auto j = a->join(r, a->base(w, 0b11), w);
    CHECK((j && j->reject));
    auto in = a->introduce(r, w1, a->base(w, 0b11), w);
    CHECK((in && in->reject));
  }
}

TEST_CASE("semantic evaluation") {
  auto forest = automaton("forest");
  Graph c4 = cycle_graph(4);
  CHECK(forest->holds(c4, ids({1, 2, 3}), ids({1, 2, 3})));
  CHECK_FALSE(forest->holds(c4, c4.vertices(), c4.vertices()));
  auto matching = automaton("packing:H=K2");
  Graph p6 = path_graph(6);
  CHECK(matching->holds(p6, ids({1, 2, 4, 5}), ids({1, 4})));
  CHECK_FALSE(matching->holds(p6, ids({1, 2, 3}), ids({1})));
  CHECK_FALSE(matching->holds(p6, ids({1, 2, 4, 5}), ids({1, 2, 4})));
}

TEST_CASE("decompositions and expressions") {
  Graph p3 = path_graph(3);
  TreeDecomposition td{{ids({1, 2}), ids({2, 3})}, {{0, 1}}};
  CHECK_FALSE(validate_decomposition(p3, td));
  Expression e = expression_from_decomposition(p3, td);
  CHECK(evaluate_edges(p3, e) == p3.edges());
  CHECK(evaluate_vertices(e) == p3.vertices());

  Graph k3 = complete_graph(3);
  Expression single = expression_from_decomposition(k3, {{k3.vertices()}, {}});
  CHECK(evaluate_edges(k3, single) == k3.edges());

  Graph star = star_graph(3);
  TreeDecomposition st{{ids({1, 2}), ids({1, 3}), ids({1, 4})}, {{0, 1}, {0, 2}}};
  Expression se = expression_from_decomposition(star, st);
  CHECK(evaluate_edges(star, se) == star.edges());
  int joins = 0;
  for (const auto& n : se.nodes) joins += n.kind == ExprNode::Kind::Join;
  CHECK(joins == 1);

  auto is = automaton("independent-set");
  auto root = run_expression(*is, p3, e, ids({1, 3}));
  REQUIRE(root);
  CHECK(is->accepting(*root));

  auto forest = automaton("forest");
  Graph c4 = cycle_graph(4);
  std::vector<Vertex> order{0, 1, 2, 3};
  Expression ce = expression_from_decomposition(c4, decomposition_from_order(c4, order));
  auto cr = run_expression(*forest, c4, ce, c4.vertices());
  CHECK((cr && !forest->accepting(*cr)));

  Graph none(0);
  Expression ee = expression_from_decomposition(none, {});
  auto er = run_expression(*is, none, ee, {});
  CHECK((er && is->accepting(*er)));
}

TEST_CASE("validation names the violated condition") {
  Graph p3 = path_graph(3);
  auto missing_vertex = validate_decomposition(p3, {{ids({1, 2})}, {}});
  REQUIRE(missing_vertex);
  CHECK(missing_vertex->find("vertex coverage") != std::string::npos);
  auto missing_edge = validate_decomposition(p3, {{ids({1, 2}), ids({3})}, {{0, 1}}});
  REQUIRE(missing_edge);
  CHECK(missing_edge->find("edge coverage") != std::string::npos);
  auto broken = validate_decomposition(p3, {{ids({1, 2}), ids({3}), ids({2, 3})}, {{0, 1}, {1, 2}}});
  REQUIRE(broken);
  CHECK(broken->find("connectivity") != std::string::npos);
  auto not_tree = validate_decomposition(p3, {{ids({1, 2}), ids({2, 3})}, {}});
  REQUIRE(not_tree);
  CHECK(not_tree->find("tree shape") != std::string::npos);
  CHECK_THROWS(expression_from_decomposition(p3, {{ids({1, 2})}, {}}));
}

TEST_CASE("run_expression agrees with semantics on random graphs") {
  std::mt19937_64 rng(21);
  const char* specs[] = {"true", "independent-set", "forest", "colorable:q=2", "max-degree:d=1",
                         "connected:T=1", "tree:T=1,2", "packing:H=K2", "packing:H=K3+P3"};
  for (int i = 0; i < 25; ++i) {
    Graph g = testing::random_graph(rng, 6, 0.45);
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Expression e1 = expression_from_decomposition(g, decomposition_from_order(g, order), 0);
    Expression e2 = expression_from_decomposition(g, clique_tree(minimal_triangulations_small(g).front()));
    for (const char* spec : specs) {
      auto a = automaton(spec);
      for (std::uint32_t xm = 0; xm < (1u << g.n()); ++xm) {
        VertexSet x;
        for (int v = 0; v < g.n(); ++v)
          if ((xm >> v) & 1u) x.insert(v);
        auto r1 = run_expression(*a, g, e1, x);
        auto r2 = run_expression(*a, g, e2, x);
        REQUIRE(r1);
        REQUIRE(r2);
        bool truth = a->holds(g, g.vertices(), x);
        CHECK_MESSAGE(a->accepting(*r1) == truth, spec);
        CHECK_MESSAGE(a->accepting(*r2) == truth, spec);
        CHECK(*r1 == *r2);
      }
    }
  }
}

TEST_CASE("isomorphism-based packing accepts members only") {
  auto a = automaton("packing:H=C4");
  Graph c4 = cycle_graph(4);
  CHECK(a->holds(c4, c4.vertices(), ids({2})));
  Graph p4 = path_graph(4);
  CHECK_FALSE(a->holds(p4, p4.vertices(), ids({2})));
}
