#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "pmcsolve/graph.hpp"

namespace pmcsolve {

namespace {

// Raw mt19937_64 output is fully specified by the standard, unlike the
// <random> distributions, so these keep generated corpora identical across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }

 private:
  std::mt19937_64 engine_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid generator parameters: " + what);
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "p must lie in [0,1]");
  Rng rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) g.add_edge(u, v);
  return g;
}

Graph k_tree(int n, int k, std::uint64_t seed) {
  require(k >= 1, "k-tree needs k >= 1");
  require(n >= k + 1, "k-tree needs n >= k+1");
  Rng rng(seed);
  Graph g(n);
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Vertex> base;
  for (Vertex u = 0; u <= k; ++u) {
    base.push_back(u);
    for (Vertex v = u + 1; v <= k; ++v) g.add_edge(u, v);
  }
  cliques.push_back(base);
  for (Vertex v = k + 1; v < n; ++v) {
    std::vector<Vertex> host = cliques[rng.below(static_cast<int>(cliques.size()))];
    host.erase(host.begin() + rng.below(k + 1));
    for (Vertex u : host) g.add_edge(u, v);
    host.push_back(v);
    cliques.push_back(std::move(host));
  }
  return g;
}

Graph interval(int n, int max_length, std::uint64_t seed) {
  if (max_length <= 0) max_length = std::max(2, n / 8);
  Rng rng(seed);
  std::vector<std::pair<int, int>> spans;
  for (int i = 0; i < n; ++i) {
    int left = rng.below(2 * std::max(n, 1));
    spans.emplace_back(left, left + 1 + rng.below(max_length));
  }
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (spans[u].first <= spans[v].second && spans[v].first <= spans[u].second) g.add_edge(u, v);
  return g;
}

}  // namespace

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph grid_graph(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

Graph gen_graph(const GenParams& p) {
  if (p.kind != GraphKind::Grid) require(p.n >= 0 && p.n <= kMaxVertices, "n out of range");
  switch (p.kind) {
    case GraphKind::Path:
      return path_graph(p.n);
    case GraphKind::Cycle:
      return cycle_graph(p.n);
    case GraphKind::Complete:
      return complete_graph(p.n);
    case GraphKind::Star:
      require(p.n >= 1, "star needs n >= 1");
      return star_graph(p.n - 1);
    case GraphKind::Grid:
      return grid_graph(p.rows, p.cols);
    case GraphKind::Gnp:
      return gnp(p.n, p.p, p.seed);
    case GraphKind::KTree:
      return k_tree(p.n, p.k, p.seed);
    case GraphKind::Interval:
      return interval(p.n, p.max_length, p.seed);
  }
  throw std::invalid_argument("unknown graph kind");
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "path") return GraphKind::Path;
  if (name == "cycle") return GraphKind::Cycle;
  if (name == "complete") return GraphKind::Complete;
  if (name == "star") return GraphKind::Star;
  if (name == "grid") return GraphKind::Grid;
  if (name == "gnp") return GraphKind::Gnp;
  if (name == "k-tree") return GraphKind::KTree;
  if (name == "interval") return GraphKind::Interval;
  throw std::invalid_argument("unknown graph kind '" + std::string(name) + "'");
}

GenParams parse_gen_spec(std::string_view text, std::uint64_t seed) {
  GenParams p;
  p.seed = seed;
  auto colon = text.find(':');
  p.kind = parse_graph_kind(text.substr(0, colon));
  if (colon == std::string_view::npos) return p;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto eq = item.find('=');
    require(eq != std::string_view::npos, "expected key=value, got '" + std::string(item) + "'");
    std::string key(item.substr(0, eq));
    std::string value(item.substr(eq + 1));
    try {
      if (key == "n")
        p.n = std::stoi(value);
      else if (key == "p")
        p.p = std::stod(value);
      else if (key == "k")
        p.k = std::stoi(value);
      else if (key == "rows")
        p.rows = std::stoi(value);
      else if (key == "cols")
        p.cols = std::stoi(value);
      else if (key == "len")
        p.max_length = std::stoi(value);
      else if (key == "seed")
        p.seed = std::stoull(value);
      else
        require(false, "unknown key '" + key + "'");
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const std::invalid_argument*>(&e) &&
          std::string(e.what()).starts_with("invalid generator"))
        throw;
      require(false, "bad value for '" + key + "'");
    }
  }
  return p;
}

}  // namespace pmcsolve
