// Python bindings. Vertices are 0-based on this side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pmcsolve/errors.hpp"
#include "pmcsolve/graph.hpp"
#include "pmcsolve/oracle.hpp"
#include "pmcsolve/problems.hpp"
#include "pmcsolve/triangulation.hpp"

namespace py = pybind11;
using namespace pmcsolve;

namespace {

std::vector<Vertex> to_list(const VertexSet& s) { return {s.begin(), s.end()}; }

std::vector<std::vector<Vertex>> to_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sets) out.push_back(to_list(s));
  return out;
}

Budgets budgets(std::size_t seps, std::size_t pmcs) { return {seps, pmcs}; }

Solution solve(const Graph& g, const std::string& problem, std::optional<int> t, std::vector<Vertex> terminals,
               std::vector<Vertex> annotate, std::vector<double> weights, std::optional<std::string> mode,
               std::optional<int> q, std::optional<int> d, std::optional<int> exact_size, std::size_t budget_seps,
               std::size_t budget_pmcs) {
  ProblemParams params;
  params.t = t;
  params.q = q;
  params.d = d;
  params.terminals = std::move(terminals);
  if (mode) {
    if (*mode != "max" && *mode != "min") throw std::invalid_argument("mode must be 'max' or 'min'");
    params.mode = *mode == "min" ? Mode::Min : Mode::Max;
  }
  ProblemSpec spec = make_problem(problem, params);
  for (Vertex v : annotate) {
    g.check_subset(VertexSet{v});
    spec.required.insert(v);
  }
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != g.n()) throw std::invalid_argument("need one weight per vertex");
    spec.weights = std::move(weights);
  }
  py::gil_scoped_release release;
  Budgets b = budgets(budget_seps, budget_pmcs);
  return exact_size ? solve_exact_size(g, spec, *exact_size, b) : solve_problem(g, spec, b);
}

}  // namespace

PYBIND11_MODULE(_pmcsolve, m) {
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("edges", &Graph::edges)
      .def("add_edge", &Graph::add_edge)
      .def("is_connected", &Graph::is_connected)
      .def("to_pace_gr", [](const Graph& g) { return to_pace_gr(g); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"),
        "Parse pace-gr text.");
  m.def("read_graph", &read_graph_file, py::arg("path"));
  m.def("generate", [](const std::string& spec, std::uint64_t seed) { return gen_graph(parse_gen_spec(spec, seed)); },
        py::arg("spec"), py::arg("seed") = 0, "Generator spec such as 'gnp:n=20,p=0.3'.");

  py::class_<EngineStats>(m, "Stats")
      .def_readonly("separators", &EngineStats::separators)
      .def_readonly("pmcs", &EngineStats::pmcs)
      .def_readonly("blocks", &EngineStats::blocks)
      .def_readonly("good_triples", &EngineStats::good_triples)
      .def_readonly("dp_keys", &EngineStats::dp_keys)
      .def_readonly("ms", &EngineStats::ms);

  py::class_<Solution>(m, "Solution")
      .def_readonly("problem", &Solution::problem)
      .def_readonly("feasible", &Solution::feasible)
      .def_readonly("value", &Solution::value)
      .def_property_readonly("F", [](const Solution& s) { return to_list(s.f); })
      .def_property_readonly("X", [](const Solution& s) { return to_list(s.x); })
      .def_readonly("stats", &Solution::stats)
      .def("__repr__", [](const Solution& s) {
        return "<Solution " + s.problem + (s.feasible ? " value=" + std::to_string(s.value) : " infeasible") + ">";
      });

  Budgets defaults;
  m.def("solve", &solve, py::arg("graph"), py::arg("problem"), py::kw_only(), py::arg("t") = py::none(),
        py::arg("terminals") = std::vector<Vertex>{}, py::arg("annotate") = std::vector<Vertex>{},
        py::arg("weights") = std::vector<double>{}, py::arg("mode") = py::none(), py::arg("q") = py::none(),
        py::arg("d") = py::none(), py::arg("exact_size") = py::none(),
        py::arg("budget_seps") = defaults.max_separators, py::arg("budget_pmcs") = defaults.max_pmcs);

  m.def("catalog", [] {
    std::vector<std::string> names;
    for (const auto& p : problem_catalog()) names.push_back(p.name);
    return names;
  });

  m.def("minimal_separators", [](const Graph& g) { return to_lists(enumerate_minimal_separators(g)); },
        py::arg("graph"));
  m.def("pmcs", [](const Graph& g) { return to_lists(enumerate_pmcs(g, enumerate_minimal_separators(g))); },
        py::arg("graph"));
  m.def("treewidth", &exact_treewidth_small, py::arg("graph"), "Exact treewidth, up to 16 vertices.");
  m.def("brute_force_separators", [](const Graph& g) { return to_lists(brute_force_separators(g)); },
        py::arg("graph"));
  m.def("brute_force_pmcs", [](const Graph& g) { return to_lists(brute_force_pmcs(g)); }, py::arg("graph"));
}
