#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmcsolve/automata.hpp"

namespace pmcsolve {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;  // bag indices

  int width() const;
};

/// Empty when td is a tree decomposition of g; otherwise a message naming the
/// first violated condition (tree shape, vertex coverage, edge coverage,
/// connectivity of the bags holding a vertex).
std::optional<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// Decomposition read off the elimination game along `order`: bag(v) is v
/// plus its later neighbors in the fill-in graph, attached to the bag of the
/// earliest of those neighbors (or to the last bag when there are none).
TreeDecomposition decomposition_from_order(const Graph& g, std::span<const Vertex> order);

/// The maximal cliques of a chordal graph h on the vertices of g, arranged
/// as a maximum-weight spanning tree of the clique intersection graph.
TreeDecomposition clique_tree(const Graph& h);

/// A composition expression producing a terminal graph G[...] of the input.
///
/// Base nodes are G[W]. Forget drops terminals of its child. Introduce glues
/// its first child (terminals W_i ⊆ W) onto its second, a base node over W.
/// Join glues two children over the same terminals.
struct ExprNode {
  enum class Kind { Base, Forget, Introduce, Join };
  Kind kind = Kind::Base;
  VertexSet terminals;
  std::vector<int> children;
};

struct Expression {
  std::vector<ExprNode> nodes;
  int root = -1;
};

/// Expression for g built from td rooted at bag `root_bag`; the result has
/// no terminals. Throws std::invalid_argument when td is not valid for g.
Expression expression_from_decomposition(const Graph& g, const TreeDecomposition& td, int root_bag = 0);

/// Edge set of the graph the expression evaluates to, as sorted pairs.
std::vector<Edge> evaluate_edges(const Graph& g, const Expression& expr);
/// Vertices the expression evaluates to.
VertexSet evaluate_vertices(const Expression& expr);

/// Folds base / forget / introduce / join over the expression. Returns
/// nullopt if some composition is invalid.
std::optional<HClass> run_expression(const Automaton& a, const Graph& g, const Expression& expr,
                                     const VertexSet& x);

}  // namespace pmcsolve
