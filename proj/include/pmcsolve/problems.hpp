#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmcsolve/automata.hpp"
#include "pmcsolve/engine.hpp"

namespace pmcsolve {

struct ProblemSpec {
  std::string name;
  int t = 1;
  PropertySpec property;
  Mode mode = Mode::Max;
  std::vector<double> weights;  // empty: all 1
  VertexSet required;           // annotations U
  std::string summary;
};

/// Overrides applied on top of a catalog entry.
struct ProblemParams {
  std::optional<int> t;
  std::optional<int> q;
  std::optional<int> d;
  std::optional<Mode> mode;
  std::vector<Vertex> terminals;     // 0-based
  std::vector<std::string> family;   // packing members, e.g. {"K2", "K3"}
};

/// Every named problem with its default parameters.
std::vector<ProblemSpec> problem_catalog();

/// Builds a problem from a catalog name, a short alias (`forest`,
/// `independent-set`, `connected`, `tree`, `colorable`, `max-degree`,
/// `packing`, `true`) or a property spec (`colorable:q=2`). t defaults to the
/// property's treewidth guarantee; connectivity problems default to min mode
/// with the terminals annotated.
ProblemSpec make_problem(std::string_view name, const ProblemParams& params = {});

/// Treewidth that every solution of the property is known to respect, when
/// there is one; otherwise the catalog default.
int default_treewidth(const PropertySpec& property);

struct Solution {
  std::string problem;
  bool feasible = false;
  double value = 0;
  VertexSet f;
  VertexSet x;
  EngineStats stats;
};

/// Splits g into components, runs the engine on each and combines the
/// results: additively for component-decomposable properties, otherwise by
/// solving the single component that holds the terminals and annotations
/// (or the best single component when there are none). The result is
/// re-checked against the property definition and, for |F| <= 16, against
/// exact treewidth; a failed check throws std::logic_error.
Solution solve_problem(const Graph& g, const ProblemSpec& spec, const Budgets& budgets = {});

/// Best solution with |X| = v exactly.
Solution solve_exact_size(const Graph& g, const ProblemSpec& spec, int v, const Budgets& budgets = {});

/// Warnings for specs whose t rests on a premise the input may violate.
std::vector<std::string> check_class_caveats(const Graph& g, const ProblemSpec& spec);

/// `<v> <w>` lines, 1-indexed; vertices not listed weigh 1. `#` and `c`
/// lines are comments. Throws ParseError.
std::vector<double> parse_weights(std::istream& in, int n);
std::vector<double> read_weights_file(const std::string& path, int n);

/// "1,4,7" -> {0,3,6}. Throws std::invalid_argument.
std::vector<Vertex> parse_vertex_list(std::string_view text, int n);

}  // namespace pmcsolve
