#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmcsolve/vertex_set.hpp"

namespace pmcsolve {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Built incrementally through add_edge and treated as immutable afterwards;
/// every query is const and safe to call concurrently.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  /// Collapses duplicates. Throws std::invalid_argument on self-loops and
  /// out-of-range ids.
  void add_edge(Vertex u, Vertex v);

  int n() const { return n_; }
  int m() const { return m_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }
  std::vector<Edge> edges() const;

  /// N(S): union of the neighborhoods of S, minus S.
  VertexSet neighborhood(const VertexSet& s) const;
  /// Components of G - excluded, ordered by smallest member.
  std::vector<VertexSet> components(const VertexSet& excluded = {}) const;
  /// Component of G[allowed] containing v (v must be in allowed).
  VertexSet component_of(Vertex v, const VertexSet& allowed) const;
  bool is_clique(const VertexSet& s) const;
  bool is_connected() const;
  /// Connected with no cycles.
  bool is_forest() const;
  /// Whether a perfect elimination ordering exists.
  bool is_chordal() const;

  /// G[keep], renumbered so that the i-th smallest kept vertex becomes i.
  /// `original`, when given, receives the old id of each new vertex.
  Graph induced(const VertexSet& keep, std::vector<Vertex>* original = nullptr) const;

  /// Range check helper for public entry points.
  void check_vertex(Vertex v) const;
  void check_subset(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

enum class GraphFormat { PaceGr, EdgeList };

/// Reads a graph. pace-gr: `p tw <n> <m>` header then 1-indexed `u v` lines,
/// `c` comment lines. edge-list: one 1-indexed `u v` per line, n inferred
/// from the largest id, `#` or `c` comments. Throws ParseError naming the line.
Graph parse_graph(std::istream& in, GraphFormat format = GraphFormat::PaceGr);
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::PaceGr);
Graph read_graph_file(const std::string& path);

/// pace-gr text, 1-indexed, edges in increasing order.
std::string to_pace_gr(const Graph& g);

enum class GraphKind { Path, Cycle, Complete, Star, Grid, Gnp, KTree, Interval };

struct GenParams {
  GraphKind kind = GraphKind::Path;
  int n = 0;
  int rows = 0, cols = 0;  // grid
  double p = 0.5;          // gnp
  int k = 1;               // k-tree
  int max_length = 0;      // interval: 0 picks a default from n
  std::uint64_t seed = 0;
};

/// Deterministic for fixed params (including seed). Star: vertex 0 is the
/// center with n-1 leaves. Grid: rows x cols, n ignored.
Graph gen_graph(const GenParams& params);

/// "gnp:n=10,p=0.3" style, as used by the CLI. Seed is taken from `seed`
/// unless the text sets one.
GenParams parse_gen_spec(std::string_view text, std::uint64_t seed = 0);
GraphKind parse_graph_kind(std::string_view name);

/// Named small graphs used throughout the tests: path(n), cycle(n), ...
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);

}  // namespace pmcsolve
