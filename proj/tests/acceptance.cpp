// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "pmcsolve/expression.hpp"
#include "pmcsolve/oracle.hpp"
#include "pmcsolve/problems.hpp"
#include "pmcsolve/triangulation.hpp"
#include "support.hpp"

using namespace pmcsolve;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<std::pair<std::string, Graph>> small_corpus() {
  std::vector<std::pair<std::string, Graph>> out = testing::named_graphs();
  std::mt19937_64 rng(101);
  const double ps[] = {0.2, 0.4, 0.6};
  for (int i = 0; i < 510; ++i) {
    int n = 2 + static_cast<int>(rng() % 6);
    double p = ps[i % 3];
    out.emplace_back("gnp" + std::to_string(i), testing::random_connected(rng, n, p));
  }
  return out;
}

Outcome separators_and_pmcs() {
  auto start = Clock::now();
  std::size_t mismatches = 0;
  auto corpus = small_corpus();
  for (const auto& [name, g] : corpus) {
    auto seps = enumerate_minimal_separators(g);
    if (seps != brute_force_separators(g)) ++mismatches;
    if (enumerate_pmcs(g, seps) != brute_force_pmcs(g)) ++mismatches;
  }
  double secs = seconds_since(start);
  std::ostringstream d;
  d << corpus.size() << " graphs, " << mismatches << " mismatches, " << secs << " s";
  return {mismatches == 0 && secs < 300, d.str()};
}

Outcome count_bound() {
  std::size_t violations = 0;
  auto corpus = small_corpus();
  for (const auto& [name, g] : corpus) {
    auto seps = enumerate_minimal_separators(g);
    if (enumerate_pmcs(g, seps).size() > pmc_count_bound(g.n(), seps.size())) ++violations;
  }
  Graph c4 = cycle_graph(4);
  auto seps = enumerate_minimal_separators(c4);
  std::size_t pmcs = enumerate_pmcs(c4, seps).size();
  std::ostringstream d;
  d << corpus.size() << " graphs, " << violations << " violations; C4: " << seps.size() << " separators, " << pmcs
    << " PMCs";
  return {violations == 0 && seps.size() == 2 && pmcs == 4, d.str()};
}

Outcome engine_equivalence() {
  auto start = Clock::now();
  VerifyConfig cfg;
  cfg.seed = 2024;
  cfg.instances = 200;
  cfg.min_n = 1;
  cfg.max_n = 10;
  auto reports = verify_corpus(cfg);
  std::size_t bad = 0;
  for (const auto& r : reports)
    if (!r.agree) {
      if (bad < 3) std::cerr << "  mismatch: " << r.check << " " << r.instance << " " << r.detail << "\n";
      ++bad;
    }
  double secs = seconds_since(start);
  std::ostringstream d;
  d << reports.size() << " instances over 9 configurations, " << bad << " mismatches, " << secs << " s";
  return {bad == 0 && reports.size() >= 9 * 200 && secs < 1800, d.str()};
}

bool same_answer(const Solution& s, const std::optional<Witness>& w) {
  if (s.feasible != w.has_value()) return false;
  return !w || (s.value == w->value && s.f == w->f && s.x == w->x);
}

Outcome weighted_and_annotated() {
  std::mt19937_64 rng(77);
  const char* names[] = {"independent-set", "forest", "induced-matching", "max-degree:d=1"};
  std::uniform_int_distribution<int> weight(-3, 5);
  int weighted = 0, annotated = 0, infeasible = 0, bad = 0;
  for (int i = 0; i < 120; ++i) {
    Graph g = testing::random_graph(rng, 3 + static_cast<int>(rng() % 7), 0.35);
    ProblemSpec spec = make_problem(names[i % 4]);
    spec.weights.resize(g.n());
    for (auto& w : spec.weights) w = weight(rng);
    auto a = make_automaton(spec.property);
    bad += !same_answer(solve_problem(g, spec), brute_force_solve(g, *a, {spec.t, spec.mode, spec.weights, {}, {}}));
    ++weighted;
  }
  for (int i = 0; i < 120; ++i) {
    int n = 3 + static_cast<int>(rng() % 7);
    Graph g = testing::random_graph(rng, n, 0.4);
    ProblemSpec spec = make_problem(names[i % 4]);
    int k = 1 + static_cast<int>(rng() % 3);
    while (spec.required.size() < std::min(k, n)) spec.required.insert(static_cast<Vertex>(rng() % n));
    if (i % 2 == 0) {
      spec.weights.resize(n);
      for (auto& w : spec.weights) w = weight(rng);
    }
    auto a = make_automaton(spec.property);
    auto oracle = brute_force_solve(g, *a, {spec.t, spec.mode, spec.weights, spec.required, {}});
    infeasible += !oracle;
    bad += !same_answer(solve_problem(g, spec), oracle);
    ++annotated;
  }
  std::ostringstream d;
  d << weighted << " weighted, " << annotated << " annotated (" << infeasible << " infeasible), " << bad
    << " mismatches";
  return {bad == 0 && weighted >= 100 && annotated >= 100 && infeasible > 0, d.str()};
}

Outcome exact_size() {
  int bad = 0, cases = 0;
  ProblemSpec spec = make_problem("independent-set");
  auto a = make_automaton(spec.property);
  for (int n = 3; n <= 8; ++n) {
    Graph c = cycle_graph(n);
    for (int v = 0; v <= n; ++v, ++cases) {
      bool engine = solve_exact_size(c, spec, v).feasible;
      bool oracle = brute_force_solve(c, *a, {0, Mode::Max, {}, {}, v}).has_value();
      if (engine != oracle || engine != (v <= n / 2)) ++bad;
    }
  }
  std::ostringstream d;
  d << cases << " (cycle, size) pairs, " << bad << " mismatches";
  return {bad == 0, d.str()};
}

// Every catalog automaton on every (F, X) of random graphs up to n = 8, each
// G[F] run through two expressions from different decompositions.
Outcome automaton_integrity() {
  std::mt19937_64 rng(31);
  std::size_t runs = 0, bad = 0, graphs = 0, distinct = 0;
  auto catalog = problem_catalog();
  for (int i = 0; i < 12; ++i) {
    int n = 5 + i % 4;
    Graph g = testing::random_graph(rng, n, 0.3 + 0.1 * (i % 3));
    ++graphs;
    for (std::uint32_t fm = 1; fm < (1u << n); ++fm) {
      VertexSet f;
      for (int v = 0; v < n; ++v)
        if ((fm >> v) & 1u) f.insert(v);
      Graph h = g.induced(f);
      std::vector<Vertex> order(h.n());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      TreeDecomposition t1 = decomposition_from_order(h, order);
      TreeDecomposition t2 = clique_tree(minimal_triangulations_small(h).back());
      Expression e1 = expression_from_decomposition(h, t1, 0);
      Expression e2 = expression_from_decomposition(h, t2, static_cast<int>(t2.bags.size()) - 1);
      distinct += e1.nodes.size() != e2.nodes.size() || t1.bags != t2.bags;
      for (const auto& entry : catalog) {
        ProblemParams params;
        if (entry.name == "k-in-a-tree" || entry.name == "min-connected-subgraph") {
          params.terminals = {0};
          if (h.n() > 1) params.terminals.push_back(static_cast<Vertex>(h.n() - 1));
        }
        auto a = make_automaton(make_problem(entry.name, params).property);
        for (std::uint32_t xm = 0; xm < (1u << h.n()); ++xm) {
          VertexSet x;
          for (int v = 0; v < h.n(); ++v)
            if ((xm >> v) & 1u) x.insert(v);
          bool truth = a->holds(h, h.vertices(), x);
          for (const Expression* e : {&e1, &e2}) {
            auto root = run_expression(*a, h, *e, x);
            ++runs;
            if (!root || a->accepting(*root) != truth) ++bad;
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << catalog.size() << " automata, " << graphs << " graphs, " << runs << " runs (" << distinct
    << " subgraphs with structurally different expressions), " << bad << " mismatches";
  return {bad == 0 && distinct > 0, d.str()};
}

Outcome lemma_sweep(const char* what, std::vector<OracleReport> reports, std::size_t needed) {
  std::size_t ok = 0;
  for (const auto& r : reports) ok += r.agree;
  std::ostringstream d;
  d << ok << "/" << reports.size() << " " << what << " checks pass";
  return {ok == reports.size() && reports.size() >= needed, d.str()};
}

Outcome terminal_treewidth() {
  VerifyConfig cfg;
  cfg.seed = 5;
  cfg.instances = 320;
  cfg.min_n = 1;
  cfg.max_n = 10;
  return lemma_sweep("terminal treewidth", verify_terminal_lemma(cfg), 300);
}

Outcome triangulation_extension() {
  VerifyConfig cfg;
  cfg.seed = 6;
  cfg.instances = 220;
  cfg.min_n = 1;
  cfg.max_n = 7;
  return lemma_sweep("triangulation extension", verify_extension_lemma(cfg), 200);
}

Outcome interval_performance() {
  std::vector<double> xs, ys;
  double solve_secs = 0;
  bool solved = false;
  for (int n : {20, 40, 60}) {
    GenParams gp;
    gp.kind = GraphKind::Interval;
    gp.n = n;
    gp.max_length = 12;
    gp.seed = 3;
    Graph g = gen_graph(gp);
    std::size_t pmcs = 0;
    for (const auto& c : g.components()) {
      Graph h = g.induced(c);
      pmcs += enumerate_pmcs(h, enumerate_minimal_separators(h)).size();
    }
    xs.push_back(std::log(n));
    ys.push_back(std::log(static_cast<double>(pmcs)));
    if (n == 60) {
      auto start = Clock::now();
      Solution s = solve_problem(g, make_problem("max-induced-forest"));
      solve_secs = seconds_since(start);
      solved = s.feasible;
    }
  }
  double mx = (xs[0] + xs[1] + xs[2]) / 3, my = (ys[0] + ys[1] + ys[2]) / 3, num = 0, den = 0;
  for (int i = 0; i < 3; ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  double slope = num / den;
  std::ostringstream d;
  d << "n=60 forest in " << solve_secs << " s, PMC growth exponent " << slope;
  return {solved && solve_secs < 60 && slope <= 3, d.str()};
}

Outcome budget_abort() {
  std::string cmd = std::string(PMCSOLVE_CLI) +
                    " solve --problem forest --gen gnp:n=40,p=0.5 --seed 1 --budget-pmcs 10000 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {false, "could not start the CLI"};
  std::string out;
  std::array<char, 256> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ostringstream d;
  d << "exit code " << code << ", " << out.size() << " bytes on stdout";
  return {code == 3 && out.empty(), d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"separator and PMC exactness", separators_and_pmcs},
      {"PMC count bound", count_bound},
      {"engine agrees with brute force", engine_equivalence},
      {"weighted and annotated instances", weighted_and_annotated},
      {"exact-size variant", exact_size},
      {"automaton integrity", automaton_integrity},
      {"terminal treewidth sweep", terminal_treewidth},
      {"triangulation extension sweep", triangulation_extension},
      {"interval graph performance", interval_performance},
      {"budget abort", budget_abort},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
