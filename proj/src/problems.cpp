#include "pmcsolve/problems.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pmcsolve/errors.hpp"

namespace pmcsolve {

namespace {

using Kind = PropertySpec::Kind;

bool connectivity(const PropertySpec& p) { return p.kind == Kind::Connected || p.kind == Kind::Tree; }

struct Alias {
  const char* alias;
  const char* name;
};

constexpr Alias kAliases[] = {
    {"independent-set", "max-independent-set"},
    {"forest", "max-induced-forest"},
    {"true", "max-induced-treewidth-t"},
    {"colorable", "max-q-colorable-subgraph"},
    {"max-degree", "max-degree-d-subgraph"},
    {"packing", "independent-packing"},
    {"tree", "k-in-a-tree"},
    {"connected", "min-connected-subgraph"},
};

ProblemSpec entry(std::string name, PropertySpec property, std::string summary) {
  ProblemSpec p;
  p.name = std::move(name);
  p.property = std::move(property);
  p.summary = std::move(summary);
  p.t = default_treewidth(p.property);
  if (connectivity(p.property)) p.mode = Mode::Min;
  return p;
}

PropertySpec property(Kind kind) {
  PropertySpec p;
  p.kind = kind;
  return p;
}

VertexSet to_original(const VertexSet& s, const std::vector<Vertex>& orig) {
  VertexSet out;
  for (Vertex v : s) out.insert(orig[v]);
  return out;
}

// One component of the input, with everything translated to its numbering.
struct Piece {
  Graph graph;
  std::vector<Vertex> orig;
  EngineOptions options;
  PropertySpec property;
};

Piece make_piece(const Graph& g, const VertexSet& comp, const ProblemSpec& spec, const Budgets& budgets,
                 bool by_size) {
  Piece p;
  p.graph = g.induced(comp, &p.orig);
  std::vector<int> local(g.n(), -1);
  for (std::size_t i = 0; i < p.orig.size(); ++i) local[p.orig[i]] = static_cast<int>(i);
  p.options.t = spec.t;
  p.options.mode = spec.mode;
  p.options.by_size = by_size;
  p.options.budgets = budgets;
  if (!spec.weights.empty())
    for (Vertex v : p.orig) p.options.weights.push_back(spec.weights[v]);
  for (Vertex v : spec.required & comp) p.options.required.insert(local[v]);
  p.property = spec.property;
  p.property.terminals.clear();
  for (Vertex v : spec.property.terminals)
    if (comp.contains(v)) p.property.terminals.push_back(local[v]);
  return p;
}

void add_stats(EngineStats& total, const EngineStats& s) {
  total.separators += s.separators;
  total.pmcs += s.pmcs;
  total.blocks += s.blocks;
  total.good_triples += s.good_triples;
  total.dp_keys += s.dp_keys;
  total.classes = std::max(total.classes, s.classes);
  total.max_classes_per_w = std::max(total.max_classes_per_w, s.max_classes_per_w);
}

Witness translate(const Witness& w, const std::vector<Vertex>& orig) {
  return {w.value, to_original(w.f, orig), to_original(w.x, orig)};
}

Witness merge(const Witness& a, const Witness& b) { return {a.value + b.value, a.f | b.f, a.x | b.x}; }

// The components a non-decomposable property may use: the one holding all
// terminals and annotations, or all of them when there are none. Empty when
// those vertices are spread over several components.
std::vector<VertexSet> candidate_components(const std::vector<VertexSet>& comps, const ProblemSpec& spec) {
  VertexSet anchored = spec.required;
  for (Vertex v : spec.property.terminals) anchored.insert(v);
  if (anchored.empty()) return comps;
  for (const auto& c : comps)
    if (anchored.is_subset_of(c)) return {c};
  return {};
}

void verify(const Graph& g, const ProblemSpec& spec, const Automaton& a, const Solution& s) {
  if (!s.feasible) return;
  if (!s.x.is_subset_of(s.f)) throw std::logic_error("internal error: witness X is not contained in F");
  if (!spec.required.is_subset_of(s.f)) throw std::logic_error("internal error: witness misses annotated vertices");
  if (!semantic_eval(a, g, s.f, s.x)) throw std::logic_error("internal error: witness violates " + a.name());
  if (s.f.size() <= kTreewidthOracleLimit && exact_treewidth_small(g.induced(s.f)) > spec.t)
    throw std::logic_error("internal error: witness exceeds treewidth " + std::to_string(spec.t));
}

void check_spec(const Graph& g, const ProblemSpec& spec) {
  if (spec.t < 0) throw std::invalid_argument("t must be >= 0");
  if (!spec.weights.empty() && static_cast<int>(spec.weights.size()) != g.n())
    throw std::invalid_argument("weights must have one entry per vertex");
  g.check_subset(spec.required);
  for (Vertex v : spec.property.terminals) g.check_vertex(v);
}

template <class PerComponent>
Solution solve_components(const Graph& g, const ProblemSpec& spec, PerComponent&& per_component) {
  auto start = std::chrono::steady_clock::now();
  check_spec(g, spec);
  Solution sol;
  sol.problem = spec.name;
  per_component(sol);
  sol.stats.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

}  // namespace

int default_treewidth(const PropertySpec& p) {
  switch (p.kind) {
    case Kind::True:
      return 2;
    case Kind::IndependentSet:
      return 0;
    case Kind::Forest:
    case Kind::Tree:
      return 1;
    case Kind::Colorable:
      return std::max(0, p.q - 1);
    case Kind::MaxDegree:
      return p.d;
    case Kind::Connected:
      return std::max(0, static_cast<int>(p.terminals.size()) - 1);
    case Kind::Packing: {
      int t = 0;
      for (const auto& name : p.family) t = std::max(t, exact_treewidth_small(named_small_graph(name)));
      return t;
    }
  }
  return 1;
}

std::vector<ProblemSpec> problem_catalog() {
  std::vector<ProblemSpec> out;
  out.push_back(entry("max-independent-set", property(Kind::IndependentSet), "largest independent set"));
  out.push_back(entry("max-induced-forest", property(Kind::Forest), "largest induced forest"));
  out.push_back(entry("max-induced-treewidth-t", property(Kind::True), "largest induced subgraph of treewidth <= t"));
  out.push_back(entry("max-q-colorable-subgraph", property(Kind::Colorable),
                      "largest X with G[X] q-colorable, among solutions of treewidth <= q-1"));
  out.push_back(entry("max-degree-d-subgraph", property(Kind::MaxDegree), "largest X with G[X] of max degree <= d"));
  PropertySpec k2 = property(Kind::Packing);
  k2.family = {"K2"};
  out.push_back(entry("induced-matching", k2, "largest induced matching (one X vertex per edge)"));
  PropertySpec k3 = property(Kind::Packing);
  k3.family = {"K3"};
  out.push_back(entry("triangle-packing", k3, "largest induced packing of triangles"));
  out.push_back(entry("independent-packing", k2, "largest induced packing of copies of members of H"));
  out.push_back(entry("k-in-a-tree", property(Kind::Tree), "smallest induced tree containing the terminals"));
  out.push_back(entry("min-connected-subgraph", property(Kind::Connected),
                      "smallest connected induced subgraph containing the terminals"));
  return out;
}

ProblemSpec make_problem(std::string_view name, const ProblemParams& params) {
  std::string key(name);
  for (const auto& a : kAliases)
    if (key == a.alias) key = a.name;
  std::optional<ProblemSpec> spec;
  for (auto& p : problem_catalog())
    if (p.name == key) spec = std::move(p);
  if (!spec) {
    PropertySpec prop = parse_property(name);
    spec = entry(std::string(name), prop, "custom property");
    spec->name = prop.to_string();
  }
  PropertySpec& prop = spec->property;
  if (params.q) {
    if (prop.kind != Kind::Colorable) throw std::invalid_argument("q only applies to colorable problems");
    prop.q = *params.q;
    if (prop.q < 1) throw std::invalid_argument("q must be >= 1");
  }
  if (params.d) {
    if (prop.kind != Kind::MaxDegree) throw std::invalid_argument("d only applies to max-degree problems");
    prop.d = *params.d;
    if (prop.d < 0) throw std::invalid_argument("d must be >= 0");
  }
  if (!params.family.empty()) {
    if (prop.kind != Kind::Packing) throw std::invalid_argument("H only applies to packing problems");
    for (const auto& h : params.family) named_small_graph(h);
    prop.family = params.family;
  }
  if (!params.terminals.empty()) {
    if (!connectivity(prop)) throw std::invalid_argument("terminals only apply to connectivity problems");
    prop.terminals = params.terminals;
    std::sort(prop.terminals.begin(), prop.terminals.end());
    prop.terminals.erase(std::unique(prop.terminals.begin(), prop.terminals.end()), prop.terminals.end());
  }
  if (connectivity(prop)) {
    spec->required = VertexSet(prop.terminals.begin(), prop.terminals.end());
  }
  spec->t = params.t.value_or(default_treewidth(prop));
  if (spec->t < 0) throw std::invalid_argument("t must be >= 0");
  if (params.mode) spec->mode = *params.mode;
  return *spec;
}

Solution solve_problem(const Graph& g, const ProblemSpec& spec, const Budgets& budgets) {
  auto automaton = make_automaton(spec.property);
  Solution sol = solve_components(g, spec, [&](Solution& sol) {
    auto comps = g.components();
    if (automaton->decomposable()) {
      Witness total;
      for (const auto& comp : comps) {
        Piece p = make_piece(g, comp, spec, budgets, false);
        auto a = make_automaton(p.property);
        EngineResult r = run_engine(p.graph, *a, p.options);
        add_stats(sol.stats, r.stats);
        if (!r.best) return;
        total = merge(total, translate(*r.best, p.orig));
      }
      if (comps.empty() && !automaton->holds(g, {}, {})) return;
      sol.feasible = true;
      sol.value = total.value;
      sol.f = total.f;
      sol.x = total.x;
      return;
    }
    std::optional<Witness> best;
    for (const auto& comp : candidate_components(comps, spec)) {
      Piece p = make_piece(g, comp, spec, budgets, false);
      auto a = make_automaton(p.property);
      EngineResult r = run_engine(p.graph, *a, p.options);
      add_stats(sol.stats, r.stats);
      if (!r.best) continue;
      Witness w = translate(*r.best, p.orig);
      if (!best || better(w, *best, spec.mode)) best = w;
    }
    if (!best) return;
    sol.feasible = true;
    sol.value = best->value;
    sol.f = best->f;
    sol.x = best->x;
  });
  verify(g, spec, *automaton, sol);
  return sol;
}

Solution solve_exact_size(const Graph& g, const ProblemSpec& spec, int v, const Budgets& budgets) {
  if (v < 0 || v > g.n()) throw std::invalid_argument("size must be in [0, n]");
  auto automaton = make_automaton(spec.property);
  Solution sol = solve_components(g, spec, [&](Solution& sol) {
    auto comps = g.components();
    std::vector<std::optional<Witness>> table;
    if (automaton->decomposable()) {
      // Knapsack over components: table[s] is the best witness of size s.
      table.assign(1, std::nullopt);
      if (comps.empty()) {
        if (automaton->holds(g, {}, {})) table[0] = Witness{};
      } else {
        table[0] = Witness{};
      }
      for (const auto& comp : comps) {
        Piece p = make_piece(g, comp, spec, budgets, true);
        auto a = make_automaton(p.property);
        EngineResult r = run_engine(p.graph, *a, p.options);
        add_stats(sol.stats, r.stats);
        std::vector<std::optional<Witness>> next(table.size() + p.graph.n());
        for (std::size_t s1 = 0; s1 < table.size(); ++s1) {
          if (!table[s1]) continue;
          for (std::size_t s2 = 0; s2 < r.by_size.size(); ++s2) {
            if (!r.by_size[s2]) continue;
            Witness w = merge(*table[s1], translate(*r.by_size[s2], p.orig));
            auto& slot = next[s1 + s2];
            if (!slot || better(w, *slot, spec.mode)) slot = w;
          }
        }
        table = std::move(next);
      }
    } else {
      table.assign(g.n() + 1, std::nullopt);
      for (const auto& comp : candidate_components(comps, spec)) {
        Piece p = make_piece(g, comp, spec, budgets, true);
        auto a = make_automaton(p.property);
        EngineResult r = run_engine(p.graph, *a, p.options);
        add_stats(sol.stats, r.stats);
        for (std::size_t s = 0; s < r.by_size.size(); ++s) {
          if (!r.by_size[s]) continue;
          Witness w = translate(*r.by_size[s], p.orig);
          if (!table[s] || better(w, *table[s], spec.mode)) table[s] = w;
        }
      }
    }
    if (v >= static_cast<int>(table.size()) || !table[v]) return;
    sol.feasible = true;
    sol.value = table[v]->value;
    sol.f = table[v]->f;
    sol.x = table[v]->x;
  });
  verify(g, spec, *automaton, sol);
  if (sol.feasible && sol.x.size() != v) throw std::logic_error("internal error: witness has the wrong size");
  return sol;
}

std::vector<std::string> check_class_caveats(const Graph& g, const ProblemSpec& spec) {
  std::vector<std::string> out;
  const PropertySpec& p = spec.property;
  if (p.kind == Kind::Colorable && !g.is_chordal())
    out.push_back("input is not chordal: a " + std::to_string(p.q) +
                  "-colorable optimum may have treewidth above " + std::to_string(spec.t) +
                  "; the result is optimal among solutions of treewidth <= " + std::to_string(spec.t));
  if (p.kind == Kind::MaxDegree && p.d >= 3)
    out.push_back("graphs of maximum degree " + std::to_string(p.d) +
                  " have unbounded treewidth; the result is optimal among solutions of treewidth <= " +
                  std::to_string(spec.t));
  if (spec.t < default_treewidth(p) && p.kind != Kind::True)
    out.push_back("t=" + std::to_string(spec.t) + " is below the treewidth the property guarantees (" +
                  std::to_string(default_treewidth(p)) + "); optimal solutions may be excluded");
  if (connectivity(p) && spec.mode == Mode::Min)
    for (double w : spec.weights)
      if (w < 0) {
        out.push_back("negative weights: minimal connected solutions may need treewidth above t");
        break;
      }
  return out;
}

std::vector<double> parse_weights(std::istream& in, int n) {
  std::vector<double> w(n, 1.0);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#' || first == "c") continue;
    long v = 0;
    double weight = 0;
    try {
      std::size_t used = 0;
      v = std::stol(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw ParseError("expected '<vertex> <weight>'", lineno);
    }
    std::string rest;
    if (!(ls >> weight) || (ls >> rest)) throw ParseError("expected '<vertex> <weight>'", lineno);
    if (v < 1 || v > n) throw ParseError("vertex id " + std::to_string(v) + " out of range", lineno);
    w[v - 1] = weight;
  }
  return w;
}

std::vector<double> read_weights_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weights file '" + path + "'");
  return parse_weights(in, n);
}

std::vector<Vertex> parse_vertex_list(std::string_view text, int n) {
  std::vector<Vertex> out;
  std::string s(text);
  std::size_t at = 0;
  while (at < s.size()) {
    auto comma = s.find(',', at);
    std::string item = s.substr(at, comma == std::string::npos ? std::string::npos : comma - at);
    long v = 0;
    try {
      std::size_t used = 0;
      v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad vertex id '" + item + "'");
    }
    if (v < 1 || v > n) throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
    out.push_back(static_cast<Vertex>(v - 1));
    if (comma == std::string::npos) break;
    at = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pmcsolve
