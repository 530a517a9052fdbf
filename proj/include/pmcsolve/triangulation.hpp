#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "pmcsolve/graph.hpp"

namespace pmcsolve {

struct Budgets {
  std::size_t max_separators = 1'000'000;
  std::size_t max_pmcs = 10'000'000;
};

/// (S, C): C a component of G - S with N(C) = S. The root block (∅, V)
/// is admitted as well.
struct FullBlock {
  VertexSet separator;
  VertexSet component;
  VertexSet vertices() const { return separator | component; }
  friend bool operator==(const FullBlock&, const FullBlock&) = default;
};

/// A good triple (S, C, Ω) with the block given by index into the block list.
struct GoodTriple {
  int block = -1;
  VertexSet pmc;
  friend bool operator==(const GoodTriple&, const GoodTriple&) = default;
};

bool is_minimal_separator(const Graph& g, const VertexSet& s);

/// All minimal separators of a connected graph, sorted by VertexSet order.
/// Seeds with N(C) for components C of G - N[v], then closes under
/// S -> N(C) for components C of G - (S ∪ N(x)), x ∈ S.
/// Throws BudgetExceeded as soon as more than `budget` are found.
std::vector<VertexSet> enumerate_minimal_separators(const Graph& g,
                                                    std::size_t budget = Budgets{}.max_separators);

/// Ω is a potential maximal clique iff no component of G - Ω sees all of Ω,
/// and every non-adjacent pair of Ω is covered by N(C) for some component C.
bool is_pmc(const Graph& g, const VertexSet& omega);

/// All potential maximal cliques of a connected graph, sorted.
///
/// Adds vertices one at a time along a connected ordering and lifts the
/// PMCs of each prefix graph to the next one from three candidate families:
/// old PMCs (with or without the new vertex), S ∪ {a} for new-prefix
/// separators S, and S ∪ (T ∩ C) for separator pairs and components C of
/// G - S. Intermediate counts never exceed the final one, so the budget is
/// enforced at every step. `separators` must be the minimal separators of g.
std::vector<VertexSet> enumerate_pmcs(const Graph& g, std::span<const VertexSet> separators,
                                      std::size_t budget = Budgets{}.max_pmcs);

/// n|Δ|² + n|Δ| + 1
std::size_t pmc_count_bound(std::size_t n, std::size_t separators);

/// All full blocks plus (∅, V), ordered by |S ∪ C| then by VertexSet order
/// of S ∪ C, so every block precedes its strict supersets. The root block is
/// always last.
std::vector<FullBlock> enumerate_full_blocks(const Graph& g, std::span<const VertexSet> separators);

/// Good triples grouped by block index (same order as `blocks`); within a
/// block, PMCs ascend in VertexSet order.
std::vector<std::vector<GoodTriple>> enumerate_good_triples(const Graph& g,
                                                            std::span<const FullBlock> blocks,
                                                            std::span<const VertexSet> pmcs);

/// (S_i, C_i) for the components C_i of G[C \ Ω], S_i = N(C_i), ordered by
/// smallest member of C_i. Empty for a base triple (Ω = S ∪ C).
std::vector<FullBlock> component_blocks(const Graph& g, const FullBlock& block,
                                        const VertexSet& pmc);

/// Everything the dynamic program walks over, with lookups from a block's
/// component to its index.
struct Skeleton {
  std::vector<VertexSet> separators;
  std::vector<VertexSet> pmcs;
  std::vector<FullBlock> blocks;
  std::vector<std::vector<GoodTriple>> triples;  // by block
  std::unordered_map<VertexSet, int> block_by_component;

  int root() const { return static_cast<int>(blocks.size()) - 1; }
  std::size_t good_triple_count() const;
  /// Index of the full block whose component is `c`; throws if absent.
  int block_index(const VertexSet& c) const;
};

/// Requires a connected graph.
Skeleton build_skeleton(const Graph& g, const Budgets& budgets = {});

/// Fill-in graph of the elimination game along `order` (a permutation of V).
Graph elimination_game(const Graph& g, std::span<const Vertex> order);

/// All minimal triangulations, from the elimination game over every vertex
/// order, keeping the inclusion-minimal results. n <= 9.
std::vector<Graph> minimal_triangulations_small(const Graph& g);

/// Maximal cliques of a chordal graph (any graph, by exhaustive scan, for
/// n <= 16), sorted.
std::vector<VertexSet> maximal_cliques_small(const Graph& g);

/// Exact treewidth: the minimum over elimination orders of the largest
/// clique created, minus one; computed over vertex subsets. n <= 16.
/// The empty graph has treewidth -1.
int exact_treewidth_small(const Graph& g);

inline constexpr int kTriangulationOracleLimit = 9;
inline constexpr int kTreewidthOracleLimit = 16;

}  // namespace pmcsolve
