#include "pmcsolve/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "pmcsolve/errors.hpp"
#include "pmcsolve/problems.hpp"
#include "pmcsolve/triangulation.hpp"

namespace pmcsolve {

namespace {

VertexSet from_mask(std::uint32_t mask) {
  VertexSet s;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1u) s.insert(v);
  return s;
}

int full_components(const Graph& g, const VertexSet& s) {
  int count = 0;
  for (const VertexSet& c : g.components(s))
    if (g.neighborhood(c) == s) ++count;
  return count;
}

}  // namespace

std::optional<Witness> brute_force_solve(const Graph& g, const Automaton& a, const OracleQuery& q) {
  const int n = g.n();
  if (n > kBruteForceSolveLimit) throw SizeLimitExceeded("brute_force_solve", n, kBruteForceSolveLimit);
  auto weight = [&](const VertexSet& s) {
    double total = 0;
    for (Vertex v : s) total += q.weights.empty() ? 1.0 : q.weights[v];
    return total;
  };
  std::optional<Witness> best;
  for (std::uint32_t fm = 0; fm < (1u << n); ++fm) {
    VertexSet f = from_mask(fm);
    if (!q.required.is_subset_of(f)) continue;
    // Best X for this F first; the treewidth test only runs if it could win.
    std::optional<Witness> local;
    for (std::uint32_t xm = fm;; xm = (xm - 1) & fm) {
      VertexSet x = from_mask(xm);
      if ((!q.exact_size || x.size() == *q.exact_size) && a.holds(g, f, x)) {
        Witness w{weight(x), f, x};
        if (!local || better(w, *local, q.mode)) local = w;
      }
      if (xm == 0) break;
    }
    if (!local || (best && !better(*local, *best, q.mode))) continue;
    if (exact_treewidth_small(g.induced(f)) > q.t) continue;
    best = local;
  }
  return best;
}

std::vector<VertexSet> brute_force_separators(const Graph& g) {
  const int n = g.n();
  if (n > kBruteForceSeparatorLimit) throw SizeLimitExceeded("brute_force_separators", n, kBruteForceSeparatorLimit);
  std::vector<VertexSet> out;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    VertexSet s = from_mask(m);
    if (full_components(g, s) >= 2) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> brute_force_pmcs(const Graph& g) {
  if (g.n() > kBruteForcePmcLimit) throw SizeLimitExceeded("brute_force_pmcs", g.n(), kBruteForcePmcLimit);
  std::set<VertexSet> all;
  for (const Graph& h : minimal_triangulations_small(g))
    for (const VertexSet& c : maximal_cliques_small(h)) all.insert(c);
  return {all.begin(), all.end()};
}

bool check_triangulation_extension(const Graph& g, const VertexSet& f, std::string* detail) {
  if (g.n() > kExtensionCheckLimit) throw SizeLimitExceeded("check_triangulation_extension", g.n(), kExtensionCheckLimit);
  g.check_subset(f);
  std::vector<Vertex> orig;
  Graph gf = g.induced(f, &orig);
  auto tgs = minimal_triangulations_small(g);
  std::vector<Graph> restricted;
  for (const Graph& tg : tgs) restricted.push_back(tg.induced(f));
  for (const Graph& tf : minimal_triangulations_small(gf)) {
    bool found = std::find(restricted.begin(), restricted.end(), tf) != restricted.end();
    if (!found) {
      if (detail) {
        *detail = "no minimal triangulation of G restricts to fill";
        for (auto [u, v] : tf.edges())
          if (!gf.adjacent(u, v)) *detail += " " + std::to_string(orig[u] + 1) + "-" + std::to_string(orig[v] + 1);
      }
      return false;
    }
  }
  return true;
}

TerminalCheck check_terminal_treewidth(const Graph& g, const VertexSet& terminals) {
  const int n = g.n();
  if (n > kTerminalCheckLimit) throw SizeLimitExceeded("check_terminal_treewidth", n, kTerminalCheckLimit);
  if (terminals.empty()) throw std::invalid_argument("check_terminal_treewidth needs terminals");
  g.check_subset(terminals);
  TerminalCheck out;
  std::vector<char> connected(std::size_t{1} << n, 0);
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    VertexSet a = from_mask(m);
    connected[m] = g.induced(a).is_connected();
  }
  int bound = terminals.size() - 1;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    VertexSet a = from_mask(m);
    if (!connected[m] || !terminals.is_subset_of(a)) continue;
    // Minimal iff no single non-terminal can be dropped: any smaller
    // connected superset of T leaves a removable leaf.
    bool minimal = true;
    for (Vertex v : a - terminals)
      if (connected[m & ~(1u << v)]) minimal = false;
    if (!minimal) continue;
    ++out.connectors;
    int tw = exact_treewidth_small(g.induced(a));
    out.max_treewidth = std::max(out.max_treewidth, tw);
    if (tw > bound) out.ok = false;
  }
  return out;
}

namespace {

std::string describe(const Graph& g, std::uint64_t seed, double p) {
  return "gnp n=" + std::to_string(g.n()) + " p=" + std::to_string(p).substr(0, 3) + " seed=" + std::to_string(seed);
}

const std::vector<std::string>& default_problems() {
  static const std::vector<std::string> list{
      "independent-set", "forest",        "true:t=1",   "true:t=2",   "induced-matching",
      "triangle-packing", "colorable:q=2", "max-degree:d=2", "connected",
  };
  return list;
}

ProblemSpec problem_for(const std::string& name, const Graph& g, std::mt19937_64& rng) {
  ProblemParams params;
  std::string key = name;
  if (key.rfind("true:t=", 0) == 0) {
    params.t = std::stoi(key.substr(7));
    key = "true";
  }
  if (key == "connected" || key == "tree" || key == "min-connected-subgraph" || key == "k-in-a-tree") {
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Vertex> ts;
    for (int i = 0; i < k; ++i) ts.push_back(static_cast<Vertex>(rng() % g.n()));
    params.terminals = ts;
  }
  return make_problem(key, params);
}

}  // namespace

std::vector<OracleReport> verify_corpus(const VerifyConfig& config) {
  std::vector<OracleReport> out;
  const auto& names = config.problems.empty() ? default_problems() : config.problems;
  std::mt19937_64 rng(config.seed);
  const double ps[] = {0.2, 0.4, 0.6};
  for (const auto& name : names) {
    for (int i = 0; i < config.instances; ++i) {
      GenParams gp;
      gp.kind = GraphKind::Gnp;
      gp.n = config.min_n + static_cast<int>(rng() % (config.max_n - config.min_n + 1));
      gp.p = ps[rng() % 3];
      gp.seed = rng();
      Graph g = gen_graph(gp);
      ProblemSpec spec = problem_for(name, g, rng);
      auto a = make_automaton(spec.property);
      OracleReport r;
      r.instance = describe(g, gp.seed, gp.p);
      r.check = spec.property.to_string() + " t=" + std::to_string(spec.t);
      auto oracle = brute_force_solve(g, *a, {spec.t, spec.mode, spec.weights, spec.required, std::nullopt});
      r.oracle_feasible = oracle.has_value();
      if (oracle) r.oracle_value = oracle->value;
      try {
        Solution s = solve_problem(g, spec);
        r.engine_feasible = s.feasible;
        r.engine_value = s.value + (config.inject_bug ? 1 : 0);
        r.f = s.f;
        r.x = s.x;
        r.agree = r.engine_feasible == r.oracle_feasible &&
                  (!s.feasible || (r.engine_value == r.oracle_value && s.f == oracle->f && s.x == oracle->x));
        if (!r.agree && oracle)
          r.detail = "oracle F={" + format_set(oracle->f) + "} X={" + format_set(oracle->x) + "}";
      } catch (const std::exception& e) {
        r.detail = e.what();
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<OracleReport> verify_terminal_lemma(const VerifyConfig& config) {
  std::vector<OracleReport> out;
  std::mt19937_64 rng(config.seed);
  const double ps[] = {0.2, 0.4, 0.6};
  int max_n = std::min(config.max_n, kTerminalCheckLimit);
  while (static_cast<int>(out.size()) < config.instances) {
    GenParams gp;
    gp.kind = GraphKind::Gnp;
    gp.n = config.min_n + static_cast<int>(rng() % (max_n - config.min_n + 1));
    gp.p = ps[rng() % 3];
    gp.seed = rng();
    Graph g = gen_graph(gp);
    if (!g.is_connected()) continue;
    int k = 1 + static_cast<int>(rng() % std::min(4, g.n()));
    VertexSet ts;
    while (ts.size() < k) ts.insert(static_cast<Vertex>(rng() % g.n()));
    TerminalCheck c = check_terminal_treewidth(g, ts);
    OracleReport r;
    r.instance = describe(g, gp.seed, gp.p) + " T={" + format_set(ts) + "}";
    r.check = "terminal-tw";
    r.oracle_feasible = r.engine_feasible = true;
    r.oracle_value = k - 1;
    r.engine_value = c.max_treewidth + (config.inject_bug ? k : 0);
    r.agree = c.ok && r.engine_value <= r.oracle_value;
    r.detail = std::to_string(c.connectors) + " minimal connectors";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<OracleReport> verify_extension_lemma(const VerifyConfig& config) {
  std::vector<OracleReport> out;
  std::mt19937_64 rng(config.seed);
  const double ps[] = {0.2, 0.4, 0.6};
  int max_n = std::min(config.max_n, 7);
  int min_n = std::min(config.min_n, max_n);
  for (int i = 0; i < config.instances; ++i) {
    GenParams gp;
    gp.kind = GraphKind::Gnp;
    gp.n = min_n + static_cast<int>(rng() % (max_n - min_n + 1));
    gp.p = ps[rng() % 3];
    gp.seed = rng();
    Graph g = gen_graph(gp);
    VertexSet f = from_mask(static_cast<std::uint32_t>(rng() % (1u << g.n())));
    OracleReport r;
    r.instance = describe(g, gp.seed, gp.p) + " F={" + format_set(f) + "}";
    r.check = "triangulation-extension";
    std::string detail;
    bool ok = check_triangulation_extension(g, f, &detail) && !config.inject_bug;
    r.oracle_feasible = r.engine_feasible = ok;
    r.agree = ok;
    r.f = f;
    r.detail = detail;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pmcsolve
