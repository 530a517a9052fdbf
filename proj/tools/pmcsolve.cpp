// Command-line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 infeasible, 3 budget
// exceeded, 4 verification disagreement.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmcsolve/engine.hpp"
#include "pmcsolve/errors.hpp"
#include "pmcsolve/graph.hpp"
#include "pmcsolve/oracle.hpp"
#include "pmcsolve/problems.hpp"
#include "pmcsolve/report.hpp"
#include "pmcsolve/triangulation.hpp"

namespace {

using namespace pmcsolve;

constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDisagree = 4;

struct InputOptions {
  std::string input;
  std::string gen;
  std::uint64_t seed = 0;
  std::size_t budget_seps = Budgets{}.max_separators;
  std::size_t budget_pmcs = Budgets{}.max_pmcs;

  void add_to(CLI::App* cmd) {
    auto* in = cmd->add_option("--input,-i", input, "graph file (pace-gr or edge list)");
    auto* g = cmd->add_option("--gen", gen, "generator spec, e.g. gnp:n=20,p=0.3");
    in->excludes(g);
    g->excludes(in);
    cmd->add_option("--seed", seed, "generator seed");
    cmd->add_option("--budget-seps", budget_seps, "abort beyond this many minimal separators")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-pmcs", budget_pmcs, "abort beyond this many potential maximal cliques")
        ->check(CLI::PositiveNumber);
  }

  Graph load() const {
    if (input.empty() == gen.empty()) throw CLI::ValidationError("exactly one of --input and --gen is required");
    if (!input.empty()) return read_graph_file(input);
    return gen_graph(parse_gen_spec(gen, seed));
  }

  Budgets budgets() const { return {budget_seps, budget_pmcs}; }
};

struct SolveOptions {
  InputOptions in;
  std::string problem;
  std::optional<int> t, q, d, exact_size;
  std::string terminals, annotate, weights_file, mode, family, format = "json", dump_tables;
  bool no_timing = false;
};

int run_solve(const SolveOptions& o) {
  Graph g = o.in.load();
  ProblemParams params;
  params.t = o.t;
  params.q = o.q;
  params.d = o.d;
  if (!o.mode.empty()) params.mode = o.mode == "min" ? Mode::Min : Mode::Max;
  if (!o.terminals.empty()) params.terminals = parse_vertex_list(o.terminals, g.n());
  if (!o.family.empty()) {
    std::string rest = o.family;
    for (std::size_t at; (at = rest.find('+')) != std::string::npos; rest = rest.substr(at + 1))
      params.family.push_back(rest.substr(0, at));
    params.family.push_back(rest);
  }
  ProblemSpec spec = make_problem(o.problem, params);
  if (!o.annotate.empty())
    for (Vertex v : parse_vertex_list(o.annotate, g.n())) spec.required.insert(v);
  if (!o.weights_file.empty()) spec.weights = read_weights_file(o.weights_file, g.n());
  for (const auto& w : check_class_caveats(g, spec)) std::cerr << "warning: " << w << "\n";

  if (!o.dump_tables.empty()) {
    if (!g.is_connected()) throw std::invalid_argument("--dump-tables needs a connected graph");
    EngineOptions eo;
    eo.t = spec.t;
    eo.mode = spec.mode;
    eo.weights = spec.weights;
    eo.required = spec.required;
    eo.keep_tables = true;
    eo.budgets = o.in.budgets();
    auto a = make_automaton(spec.property);
    EngineResult r = run_engine(g, *a, eo);
    std::ofstream out(o.dump_tables);
    if (!out) throw std::runtime_error("cannot write '" + o.dump_tables + "'");
    for (const auto& e : r.tables) out << format_table_entry(e) << "\n";
  }

  Solution s = o.exact_size ? solve_exact_size(g, spec, *o.exact_size, o.in.budgets())
                            : solve_problem(g, spec, o.in.budgets());
  if (o.format == "text") {
    std::cout << solution_text(g, s, !o.no_timing);
  } else {
    std::cout << solution_json(g, s, !o.no_timing) << "\n";
  }
  return s.feasible ? 0 : kExitInfeasible;
}

struct EnumerateOptions {
  InputOptions in;
  bool separators = false, pmcs = false, blocks = false, triples = false, stats = false;
};

int run_enumerate(const EnumerateOptions& o) {
  Graph g = o.in.load();
  if (!g.is_connected()) throw std::invalid_argument("enumerate needs a connected graph");
  int picked = o.separators + o.pmcs + o.blocks + o.triples;
  if (picked > 1) throw CLI::ValidationError("choose one of --separators, --pmcs, --blocks, --triples");
  Budgets b = o.in.budgets();
  auto seps = enumerate_minimal_separators(g, b.max_separators);
  std::vector<VertexSet> pmcs;
  if (o.pmcs || o.blocks || o.triples || o.stats) pmcs = enumerate_pmcs(g, seps, b.max_pmcs);
  auto line = [](const VertexSet& s) { return format_set(s, 1, ' '); };
  if (o.separators)
    for (const auto& s : seps) std::cout << line(s) << "\n";
  if (o.pmcs)
    for (const auto& p : pmcs) std::cout << line(p) << "\n";
  if (o.blocks || o.triples) {
    auto blocks = enumerate_full_blocks(g, seps);
    if (o.blocks)
      for (const auto& bl : blocks) std::cout << line(bl.separator) << " | " << line(bl.component) << "\n";
    if (o.triples) {
      auto triples = enumerate_good_triples(g, blocks, pmcs);
      for (std::size_t i = 0; i < triples.size(); ++i)
        for (const auto& tr : triples[i])
          std::cout << line(blocks[i].separator) << " | " << line(blocks[i].component) << " | " << line(tr.pmc)
                    << "\n";
    }
  }
  if (o.stats) {
    std::size_t bound = pmc_count_bound(g.n(), seps.size());
    std::cout << "separators: " << seps.size() << "\n";
    std::cout << "pmcs: " << pmcs.size() << "\n";
    std::cout << pmcs.size() << " ≤ " << bound << ": " << (pmcs.size() <= bound ? "ok" : "VIOLATED") << "\n";
  }
  return 0;
}

struct VerifyOptions {
  VerifyConfig config;
  std::string lemma;
};

int run_verify(const VerifyOptions& o) {
  std::vector<OracleReport> reports;
  if (o.lemma.empty()) {
    reports = verify_corpus(o.config);
  } else if (o.lemma == "terminal-tw") {
    reports = verify_terminal_lemma(o.config);
  } else if (o.lemma == "triangulation-extension") {
    reports = verify_extension_lemma(o.config);
  } else {
    throw CLI::ValidationError("--lemma must be terminal-tw or triangulation-extension");
  }
  bool all = true;
  for (const auto& r : reports) {
    std::cout << report_json(r) << "\n";
    all &= r.agree;
  }
  return all ? 0 : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal induced subgraphs of bounded treewidth via potential maximal cliques"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "solve an optimization problem");
  solve.in.add_to(s);
  s->add_option("--problem,-p", solve.problem, "catalog name, alias or property spec")->required();
  s->add_option("--t", solve.t, "treewidth bound (default: the property's guarantee)");
  s->add_option("--terminals", solve.terminals, "terminal vertices, e.g. 1,4");
  s->add_option("--annotate", solve.annotate, "vertices forced into F, e.g. 2,5");
  s->add_option("--weights-file", solve.weights_file, "lines '<vertex> <weight>'");
  s->add_option("--mode", solve.mode, "max or min")->check(CLI::IsMember({"max", "min"}));
  s->add_option("--q", solve.q, "colors for colorable");
  s->add_option("--d", solve.d, "degree bound for max-degree");
  s->add_option("--H", solve.family, "packing family, e.g. K2+K3");
  s->add_option("--exact-size", solve.exact_size, "require |X| to equal this value");
  s->add_option("--format", solve.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  s->add_flag("--no-timing", solve.no_timing, "report ms as 0");
  s->add_option("--dump-tables", solve.dump_tables, "write α/β table entries to this file");

  EnumerateOptions en;
  auto* e = app.add_subcommand("enumerate", "list separators, PMCs, full blocks or good triples");
  en.in.add_to(e);
  e->add_flag("--separators", en.separators);
  e->add_flag("--pmcs", en.pmcs);
  e->add_flag("--blocks", en.blocks);
  e->add_flag("--triples", en.triples);
  e->add_flag("--stats", en.stats, "print counts and the PMC count bound check");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "compare against brute force on random instances");
  v->add_option("--seed", ver.config.seed);
  v->add_option("--instances", ver.config.instances, "instances per problem")->check(CLI::PositiveNumber);
  v->add_option("--min-n", ver.config.min_n)->check(CLI::Range(1, 14));
  v->add_option("--max-n", ver.config.max_n)->check(CLI::Range(1, 14));
  v->add_option("--problem", ver.config.problems, "restrict to these problems (repeatable)");
  v->add_option("--lemma", ver.lemma, "terminal-tw or triangulation-extension");
  v->add_flag("--inject-bug", ver.config.inject_bug)->group("");

  std::string gen_spec, output;
  std::uint64_t gen_seed = 0;
  auto* gcmd = app.add_subcommand("generate", "write a generated graph in pace-gr format");
  gcmd->add_option("--gen", gen_spec, "generator spec, e.g. interval:n=60")->required();
  gcmd->add_option("--seed", gen_seed);
  gcmd->add_option("--output,-o", output);

  auto* cat = app.add_subcommand("catalog", "list the named problems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*s) return run_solve(solve);
    if (*e) return run_enumerate(en);
    if (*v) {
      if (ver.config.min_n > ver.config.max_n) throw CLI::ValidationError("--min-n exceeds --max-n");
      return run_verify(ver);
    }
    if (*gcmd) {
      Graph g = gen_graph(parse_gen_spec(gen_spec, gen_seed));
      if (output.empty()) {
        std::cout << to_pace_gr(g);
      } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write '" + output + "'");
        out << to_pace_gr(g);
      }
      return 0;
    }
    if (*cat) {
      for (const auto& p : problem_catalog())
        std::cout << p.name << "  (t=" << p.t << ", " << (p.mode == Mode::Max ? "max" : "min") << ")  "
                  << p.summary << "\n";
      return 0;
    }
  } catch (const BudgetExceeded& err) {
    std::cerr << "budget exceeded: " << err.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
