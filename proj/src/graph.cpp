#include "pmcsolve/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "pmcsolve/errors.hpp"

namespace pmcsolve {

std::string format_set(const VertexSet& s, int offset, char sep) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += sep;
    out += std::to_string(v + offset);
  }
  return out;
}

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph size " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u + 1));
  if (adj_[u].contains(v)) return;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++m_;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex id " + std::to_string(v) + " out of range for n=" +
                            std::to_string(n_));
}

void Graph::check_subset(const VertexSet& s) const {
  if (!s.is_subset_of(vertices()))
    throw std::out_of_range("vertex set {" + format_set(s) + "} not contained in V (n=" +
                            std::to_string(n_) + ")");
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = adj_[u].next(u + 1); v != -1; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
  VertexSet out;
  for (Vertex v : s) out |= adj_[v];
  return out - s;
}

VertexSet Graph::component_of(Vertex v, const VertexSet& allowed) const {
  VertexSet comp{v};
  VertexSet frontier{v};
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next |= adj_[u];
    next &= allowed;
    next -= comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

std::vector<VertexSet> Graph::components(const VertexSet& excluded) const {
  std::vector<VertexSet> out;
  VertexSet rest = vertices() - excluded;
  while (!rest.empty()) {
    VertexSet c = component_of(rest.first(), rest);
    rest -= c;
    out.push_back(c);
  }
  return out;
}

bool Graph::is_clique(const VertexSet& s) const {
  for (Vertex v : s) {
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(adj_[v])) return false;
  }
  return true;
}

bool Graph::is_connected() const { return components().size() <= 1; }

bool Graph::is_forest() const { return m_ + static_cast<int>(components().size()) == n_; }

bool Graph::is_chordal() const {
  // Maximum cardinality search yields a reverse perfect elimination ordering
  // whenever one exists; verify it.
  std::vector<int> weight(n_, 0);
  std::vector<Vertex> order;
  VertexSet numbered;
  for (int i = 0; i < n_; ++i) {
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v)
      if (!numbered.contains(v) && (best == -1 || weight[v] > weight[best])) best = v;
    numbered.insert(best);
    order.push_back(best);
    for (Vertex u : adj_[best] - numbered) ++weight[u];
  }
  // order is the reverse of an elimination ordering: earlier-numbered
  // neighbors of each vertex must form a clique.
  VertexSet earlier;
  for (Vertex v : order) {
    if (!is_clique(adj_[v] & earlier)) return false;
    earlier.insert(v);
  }
  return true;
}

Graph Graph::induced(const VertexSet& keep, std::vector<Vertex>* original) const {
  check_subset(keep);
  std::vector<Vertex> ids = keep.to_vector();
  std::vector<int> pos(n_, -1);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) pos[ids[i]] = i;
  Graph h(static_cast<int>(ids.size()));
  for (int i = 0; i < static_cast<int>(ids.size()); ++i)
    for (Vertex u : adj_[ids[i]] & keep)
      if (pos[u] > i) h.add_edge(i, pos[u]);
  if (original) *original = std::move(ids);
  return h;
}

namespace {

bool is_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == 'c' || line[pos] == '#';
}

long parse_id(std::istringstream& ss, std::size_t line_no) {
  long v;
  if (!(ss >> v)) throw ParseError("expected two vertex ids", line_no);
  return v;
}

void expect_end(std::istringstream& ss, std::size_t line_no) {
  std::string extra;
  if (ss >> extra) throw ParseError("unexpected token '" + extra + "'", line_no);
}

Graph parse_pace(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long n = -1, m = -1;
  std::vector<std::pair<long, long>> edges;
  std::vector<std::size_t> edge_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment(line)) continue;
    std::istringstream ss(line);
    if (n < 0) {
      std::string p, tw;
      if (!(ss >> p >> tw >> n >> m) || p != "p" || tw != "tw" || n < 0 || m < 0)
        throw ParseError("malformed header, expected 'p tw <n> <m>'", line_no);
      expect_end(ss, line_no);
      if (n > kMaxVertices)
        throw ParseError("graph has " + std::to_string(n) + " vertices; at most " +
                             std::to_string(kMaxVertices) + " supported",
                         line_no);
      continue;
    }
    long u = parse_id(ss, line_no);
    long v = parse_id(ss, line_no);
    expect_end(ss, line_no);
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError("vertex id out of range (n=" + std::to_string(n) + ")", line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    edges.emplace_back(u - 1, v - 1);
    edge_lines.push_back(line_no);
  }
  if (n < 0) throw ParseError("missing 'p tw' header", line_no);
  if (static_cast<long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     line_no);
  Graph g(static_cast<int>(n));
  for (auto [u, v] : edges) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return g;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long n = 0;
  std::vector<std::pair<long, long>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment(line)) continue;
    std::istringstream ss(line);
    long u = parse_id(ss, line_no);
    long v = parse_id(ss, line_no);
    expect_end(ss, line_no);
    if (u < 1 || v < 1 || u > kMaxVertices || v > kMaxVertices)
      throw ParseError("vertex id out of range", line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    edges.emplace_back(u - 1, v - 1);
    n = std::max({n, u, v});
  }
  Graph g(static_cast<int>(n));
  for (auto [u, v] : edges) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return g;
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::PaceGr ? parse_pace(in) : parse_edge_list(in);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, format);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  // .gr files are pace-gr; anything else is sniffed from the first
  // non-comment line.
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  GraphFormat format = GraphFormat::EdgeList;
  std::istringstream probe(text);
  std::string line;
  while (std::getline(probe, line)) {
    if (is_comment(line)) continue;
    if (line.find_first_not_of(" \t") != std::string::npos &&
        line[line.find_first_not_of(" \t")] == 'p')
      format = GraphFormat::PaceGr;
    break;
  }
  return parse_graph(text, format);
}

std::string to_pace_gr(const Graph& g) {
  std::string out = "p tw " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

}  // namespace pmcsolve
