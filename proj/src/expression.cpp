#include "pmcsolve/expression.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pmcsolve/triangulation.hpp"

namespace pmcsolve {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, b.size() - 1);
  return w;
}

std::optional<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  int k = static_cast<int>(td.bags.size());
  if (k == 0) {
    if (g.n() == 0) return std::nullopt;
    return "vertex coverage: no bags";
  }
  if (static_cast<int>(td.edges.size()) != k - 1) return "tree shape: expected " + std::to_string(k - 1) + " edges";
  std::vector<std::vector<int>> adj(k);
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= k || b >= k || a == b) return "tree shape: bad edge";
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  {
    std::vector<char> seen(k, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      ++count;
      for (int c : adj[b])
        if (!seen[c]) {
          seen[c] = 1;
          stack.push_back(c);
        }
    }
    if (count != k) return "tree shape: bags are not connected";
  }
  for (const auto& bag : td.bags)
    if (!bag.is_subset_of(g.vertices())) return "vertex coverage: bag holds a vertex outside the graph";
  for (Vertex v = 0; v < g.n(); ++v) {
    std::vector<char> holds(k, 0);
    int first = -1, total = 0;
    for (int b = 0; b < k; ++b)
      if (td.bags[b].contains(v)) {
        holds[b] = 1;
        ++total;
        if (first < 0) first = b;
      }
    if (first < 0) return "vertex coverage: vertex " + std::to_string(v + 1) + " is in no bag";
    std::vector<int> stack{first};
    std::vector<char> seen(k, 0);
    seen[first] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      ++reached;
      for (int c : adj[b])
        if (holds[c] && !seen[c]) {
          seen[c] = 1;
          stack.push_back(c);
        }
    }
    if (reached != total)
      return "connectivity: bags containing vertex " + std::to_string(v + 1) + " are not connected";
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& bag : td.bags) covered |= bag.contains(u) && bag.contains(v);
    if (!covered)
      return "edge coverage: edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " is in no bag";
  }
  return std::nullopt;
}

TreeDecomposition decomposition_from_order(const Graph& g, std::span<const Vertex> order) {
  Graph h = elimination_game(g, order);
  int n = g.n();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  TreeDecomposition td;
  td.bags.resize(n);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    VertexSet bag{v};
    int parent = -1;
    for (Vertex u : h.neighbors(v))
      if (pos[u] > i) {
        bag.insert(u);
        if (parent < 0 || pos[u] < parent) parent = pos[u];
      }
    td.bags[i] = bag;
    if (i + 1 < n) td.edges.emplace_back(i, parent < 0 ? n - 1 : parent);
  }
  return td;
}

TreeDecomposition clique_tree(const Graph& h) {
  TreeDecomposition td;
  td.bags = maximal_cliques_small(h);
  int k = static_cast<int>(td.bags.size());
  // Prim on intersection sizes; ties broken by index for determinism.
  std::vector<char> in(k, 0);
  std::vector<int> best(k, -1), link(k, -1);
  if (k == 0) return td;
  in[0] = 1;
  for (int b = 1; b < k; ++b) {
    best[b] = (td.bags[0] & td.bags[b]).size();
    link[b] = 0;
  }
  for (int step = 1; step < k; ++step) {
    int pick = -1;
    for (int b = 0; b < k; ++b)
      if (!in[b] && (pick < 0 || best[b] > best[pick])) pick = b;
    in[pick] = 1;
    td.edges.emplace_back(link[pick], pick);
    for (int b = 0; b < k; ++b) {
      if (in[b]) continue;
      int s = (td.bags[pick] & td.bags[b]).size();
      if (s > best[b]) {
        best[b] = s;
        link[b] = pick;
      }
    }
  }
  return td;
}

Expression expression_from_decomposition(const Graph& g, const TreeDecomposition& td, int root_bag) {
  if (auto err = validate_decomposition(g, td)) throw std::invalid_argument("invalid tree decomposition: " + *err);
  Expression expr;
  if (td.bags.empty()) {
    expr.nodes.push_back({ExprNode::Kind::Base, {}, {}});
    expr.root = 0;
    return expr;
  }
  int k = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> adj(k);
  for (auto [a, b] : td.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto add = [&expr](ExprNode::Kind kind, VertexSet terminals, std::vector<int> children) {
    expr.nodes.push_back({kind, terminals, std::move(children)});
    return static_cast<int>(expr.nodes.size()) - 1;
  };
  // Iterative post-order over the rooted tree.
  std::vector<int> parent(k, -1), order;
  std::vector<int> stack{root_bag};
  parent[root_bag] = root_bag;
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    order.push_back(b);
    for (int c : adj[b])
      if (parent[c] < 0) {
        parent[c] = b;
        stack.push_back(c);
      }
  }
  std::vector<int> node_of(k, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int b = *it;
    const VertexSet& w = td.bags[b];
    int acc = -1;
    for (int c : adj[b]) {
      if (c == parent[b] && b != root_bag) continue;
      if (parent[c] != b) continue;
      int child = node_of[c];
      VertexSet shared = td.bags[c] & w;
      if (shared != td.bags[c]) child = add(ExprNode::Kind::Forget, shared, {child});
      int base = add(ExprNode::Kind::Base, w, {});
      int glued = add(ExprNode::Kind::Introduce, w, {child, base});
      acc = acc < 0 ? glued : add(ExprNode::Kind::Join, w, {acc, glued});
    }
    node_of[b] = acc < 0 ? add(ExprNode::Kind::Base, w, {}) : acc;
  }
  int top = node_of[root_bag];
  expr.root = td.bags[root_bag].empty() ? top : add(ExprNode::Kind::Forget, {}, {top});
  return expr;
}

std::vector<Edge> evaluate_edges(const Graph& g, const Expression& expr) {
  std::vector<Edge> out;
  for (const auto& node : expr.nodes) {
    if (node.kind != ExprNode::Kind::Base) continue;
    for (Vertex u : node.terminals)
      for (Vertex v : g.neighbors(u) & node.terminals)
        if (u < v) out.emplace_back(u, v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet evaluate_vertices(const Expression& expr) {
  VertexSet out;
  for (const auto& node : expr.nodes)
    if (node.kind == ExprNode::Kind::Base) out = out | node.terminals;
  return out;
}

std::optional<HClass> run_expression(const Automaton& a, const Graph& g, const Expression& expr,
                                     const VertexSet& x) {
  std::vector<std::optional<HClass>> cls(expr.nodes.size());
  std::vector<Bag> bags(expr.nodes.size());
  // Children always precede their parent in the node list.
  for (std::size_t i = 0; i < expr.nodes.size(); ++i) {
    const ExprNode& node = expr.nodes[i];
    bags[i] = make_bag(g, node.terminals);
    const Bag& w = bags[i];
    switch (node.kind) {
      case ExprNode::Kind::Base:
        cls[i] = a.base(w, w.mask_of(x));
        break;
      case ExprNode::Kind::Forget: {
        int c = node.children[0];
        if (cls[c]) cls[i] = a.forget(*cls[c], bags[c], w);
        break;
      }
      case ExprNode::Kind::Introduce: {
        int c = node.children[0], b = node.children[1];
        if (cls[c] && cls[b]) cls[i] = a.introduce(*cls[c], bags[c], *cls[b], w);
        break;
      }
      case ExprNode::Kind::Join: {
        int c = node.children[0], b = node.children[1];
        if (cls[c] && cls[b]) cls[i] = a.join(*cls[c], *cls[b], w);
        break;
      }
    }
  }
  return cls[expr.root];
}

}  // namespace pmcsolve
