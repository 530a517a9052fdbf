#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmcsolve/automata.hpp"
#include "pmcsolve/triangulation.hpp"

namespace pmcsolve {

enum class Mode { Max, Min };

struct EngineOptions {
  int t = 1;
  Mode mode = Mode::Max;
  /// Vertex weights, indexed by vertex; empty means all 1.
  std::vector<double> weights;
  /// Annotated vertices: every solution must have them in F.
  VertexSet required;
  /// Keep one best entry per (class, |X|) so that every reachable size is
  /// reported, instead of one per class.
  bool by_size = false;
  /// Record every α and β entry for inspection.
  bool keep_tables = false;
  Budgets budgets;
};

/// A solution candidate: objective value and its witness sets.
struct Witness {
  double value = 0;
  VertexSet f;
  VertexSet x;
};

/// Strictly better under `mode`, ties broken by F then X in VertexSet order.
bool better(const Witness& a, const Witness& b, Mode mode);

struct EngineStats {
  std::size_t separators = 0;
  std::size_t pmcs = 0;
  std::size_t blocks = 0;
  std::size_t good_triples = 0;
  std::size_t dp_keys = 0;     // α and β entries created
  std::size_t classes = 0;     // distinct classes seen
  std::size_t max_classes_per_w = 0;
  double ms = 0;
};

/// One stored table entry. For α entries `pmc` is empty and `is_beta` false.
struct TableEntry {
  bool is_beta = false;
  VertexSet separator, component, pmc, w;
  HClass cls;
  Witness witness;
};

struct EngineResult {
  /// Best accepting solution, if any.
  std::optional<Witness> best;
  /// by_size only: best accepting solution with |X| = v, for v in [0, n].
  std::vector<std::optional<Witness>> by_size;
  EngineStats stats;
  std::vector<TableEntry> tables;  // keep_tables only
};

/// Runs the dynamic program over blocks and good triples of a connected
/// graph. Table entries store their witness (F, X) directly, so
/// reconstruction is a lookup. Throws BudgetExceeded from the skeleton.
EngineResult run_engine(const Graph& g, const Automaton& a, const EngineOptions& options);
EngineResult run_engine(const Graph& g, const Skeleton& skeleton, const Automaton& a,
                        const EngineOptions& options);

/// `alpha|beta S|C|Ω|W|class-hash value` with 1-indexed comma-separated sets.
std::string format_table_entry(const TableEntry& e);

}  // namespace pmcsolve
