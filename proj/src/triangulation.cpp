#include "pmcsolve/triangulation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "pmcsolve/errors.hpp"
#include "pmcsolve/parallel.hpp"

namespace pmcsolve {

namespace {

// Everything below works inside G[allowed] so the incremental PMC listing
// can reuse it on prefix graphs without renumbering.

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

std::vector<VertexSet> components_in(const Graph& g, const VertexSet& allowed) {
  std::vector<VertexSet> out;
  VertexSet rest = allowed;
  while (!rest.empty()) {
    VertexSet c = g.component_of(rest.first(), rest);
    rest -= c;
    out.push_back(c);
  }
  return out;
}

std::vector<VertexSet> separators_in(const Graph& g, const VertexSet& allowed, std::size_t budget) {
  std::unordered_set<VertexSet> seen;
  std::vector<VertexSet> queue;
  auto offer = [&](const VertexSet& excluded) {
    for (const VertexSet& c : components_in(g, allowed - excluded)) {
      VertexSet s = g.neighborhood(c) & allowed;
      if (s.empty() || !seen.insert(s).second) continue;
      if (seen.size() > budget) throw BudgetExceeded("minimal separator enumeration", budget);
      queue.push_back(s);
    }
  };
  for (Vertex v : allowed) offer(closed_neighborhood(g, v) & allowed);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexSet s = queue[i];
    for (Vertex x : s) offer(s | (g.neighbors(x) & allowed));
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_pmc_in(const Graph& g, const VertexSet& allowed, const VertexSet& omega) {
  if (omega.empty()) return false;
  // covered[u] collects every vertex of Ω that u is adjacent to in the
  // completed graph (G plus all N(C) made into cliques).
  std::vector<std::pair<Vertex, VertexSet>> covered;
  for (Vertex u : omega) covered.emplace_back(u, g.neighbors(u) & omega);
  for (const VertexSet& c : components_in(g, allowed - omega)) {
    VertexSet s = g.neighborhood(c) & allowed;
    if (s == omega) return false;
    for (auto& [u, cov] : covered)
      if (s.contains(u)) cov |= s;
  }
  for (auto& [u, cov] : covered) {
    cov.insert(u);
    if (cov != omega) return false;
  }
  return true;
}

std::vector<Vertex> connected_order(const Graph& g) {
  std::vector<Vertex> order;
  if (g.n() == 0) return order;
  VertexSet visited{0};
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex u : g.neighbors(order[i]) - visited) {
      visited.insert(u);
      order.push_back(u);
    }
  return order;
}

}  // namespace

bool is_minimal_separator(const Graph& g, const VertexSet& s) {
  g.check_subset(s);
  if (s.empty()) return false;
  int full = 0;
  for (const VertexSet& c : g.components(s))
    if (g.neighborhood(c) == s && ++full == 2) return true;
  return false;
}

std::vector<VertexSet> enumerate_minimal_separators(const Graph& g, std::size_t budget) {
  if (!g.is_connected()) throw std::invalid_argument("separator enumeration needs a connected graph");
  return separators_in(g, g.vertices(), budget);
}

bool is_pmc(const Graph& g, const VertexSet& omega) {
  g.check_subset(omega);
  return is_pmc_in(g, g.vertices(), omega);
}

std::size_t pmc_count_bound(std::size_t n, std::size_t separators) {
  return n * separators * separators + n * separators + 1;
}

std::vector<VertexSet> enumerate_pmcs(const Graph& g, std::span<const VertexSet> separators,
                                      std::size_t budget) {
  if (!g.is_connected()) throw std::invalid_argument("PMC enumeration needs a connected graph");
  if (g.n() == 0) return {};
  std::vector<Vertex> order = connected_order(g);

  VertexSet prefix{order[0]};
  std::vector<VertexSet> pmcs{prefix};
  std::unordered_set<VertexSet> prev_separators;
  std::size_t budget_for_separators = std::max<std::size_t>(separators.size(), 1);

  for (std::size_t i = 1; i < order.size(); ++i) {
    const Vertex a = order[i];
    const VertexSet grown = prefix | VertexSet{a};
    const bool last = i + 1 == order.size();
    std::vector<VertexSet> seps =
        last ? std::vector<VertexSet>(separators.begin(), separators.end())
             : separators_in(g, grown, budget_for_separators);

    std::unordered_set<VertexSet> accepted;
    std::vector<VertexSet> result;
    auto accept = [&](const VertexSet& omega) {
      if (!accepted.insert(omega).second) return;
      result.push_back(omega);
      if (result.size() > budget) throw BudgetExceeded("potential maximal clique enumeration", budget);
    };

    for (const VertexSet& p : pmcs) {
      if (is_pmc_in(g, grown, p)) {
        accept(p);
      } else {
        VertexSet q = p;
        q.insert(a);
        if (is_pmc_in(g, grown, q)) accept(q);
      }
    }

    // The remaining candidates are independent, so they are generated per
    // separator and filtered in parallel; accept() runs in separator order.
    auto candidates_for = [&](const VertexSet& s) {
      std::vector<VertexSet> out;
      VertexSet with_a = s;
      with_a.insert(a);
      if (!accepted.contains(with_a) && is_pmc_in(g, grown, with_a)) out.push_back(with_a);
      if (s.contains(a) || prev_separators.contains(s)) return out;
      std::unordered_set<VertexSet> local;
      for (const VertexSet& c : components_in(g, grown - s))
        for (const VertexSet& t : seps) {
          VertexSet omega = s | (t & c);
          if (omega == s || accepted.contains(omega) || !local.insert(omega).second) continue;
          if (is_pmc_in(g, grown, omega)) out.push_back(omega);
        }
      return out;
    };
    std::size_t threads = worker_threads();
    std::size_t chunk = std::max<std::size_t>(1, threads * 4);
    for (std::size_t lo = 0; lo < seps.size(); lo += chunk) {
      std::size_t hi = std::min(seps.size(), lo + chunk);
      std::vector<std::vector<VertexSet>> found(hi - lo);
      parallel_for(hi - lo, [&](std::size_t k) { found[k] = candidates_for(seps[lo + k]); });
      for (auto& batch : found)
        for (const VertexSet& omega : batch) accept(omega);
    }

    pmcs = std::move(result);
    prev_separators = std::unordered_set<VertexSet>(seps.begin(), seps.end());
    prefix = grown;
  }
  std::sort(pmcs.begin(), pmcs.end());
  return pmcs;
}

std::vector<FullBlock> enumerate_full_blocks(const Graph& g, std::span<const VertexSet> separators) {
  std::vector<FullBlock> blocks;
  std::unordered_set<VertexSet> seen;
  for (const VertexSet& s : separators)
    for (const VertexSet& c : g.components(s))
      if (g.neighborhood(c) == s && seen.insert(c).second) blocks.push_back({s, c});
  std::sort(blocks.begin(), blocks.end(), [](const FullBlock& x, const FullBlock& y) {
    VertexSet vx = x.vertices(), vy = y.vertices();
    int sx = vx.size(), sy = vy.size();
    if (sx != sy) return sx < sy;
    return vx < vy;
  });
  blocks.push_back({VertexSet{}, g.vertices()});
  return blocks;
}

std::vector<std::vector<GoodTriple>> enumerate_good_triples(const Graph& g,
                                                            std::span<const FullBlock> blocks,
                                                            std::span<const VertexSet> pmcs) {
  std::unordered_map<VertexSet, int> by_component;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    by_component.emplace(blocks[b].component, b);
  const int root = static_cast<int>(blocks.size()) - 1;

  std::vector<std::set<VertexSet>> grouped(blocks.size());
  for (const VertexSet& omega : pmcs) {
    grouped[root].insert(omega);
    // Each non-root block (S, C) with S ⊂ Ω ⊆ S ∪ C has S = N(D) for a
    // component D of G - Ω, and C is the component of G - S holding Ω \ S.
    for (const VertexSet& d : g.components(omega)) {
      VertexSet s = g.neighborhood(d);
      if (s == omega) continue;
      VertexSet c = g.component_of((omega - s).first(), g.vertices() - s);
      auto it = by_component.find(c);
      if (it == by_component.end() || blocks[it->second].separator != s)
        throw std::logic_error("good triple refers to an unknown full block");
      grouped[it->second].insert(omega);
    }
  }
  std::vector<std::vector<GoodTriple>> out(blocks.size());
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (const VertexSet& omega : grouped[b]) out[b].push_back({b, omega});
  return out;
}

std::vector<FullBlock> component_blocks(const Graph& g, const FullBlock& block,
                                        const VertexSet& pmc) {
  std::vector<FullBlock> out;
  VertexSet rest = block.component - pmc;
  while (!rest.empty()) {
    VertexSet c = g.component_of(rest.first(), rest);
    rest -= c;
    out.push_back({g.neighborhood(c), c});
  }
  return out;
}

std::size_t Skeleton::good_triple_count() const {
  std::size_t total = 0;
  for (const auto& t : triples) total += t.size();
  return total;
}

int Skeleton::block_index(const VertexSet& c) const {
  auto it = block_by_component.find(c);
  if (it == block_by_component.end())
    throw std::logic_error("no full block with component {" + format_set(c) + "}");
  return it->second;
}

Skeleton build_skeleton(const Graph& g, const Budgets& budgets) {
  Skeleton sk;
  sk.separators = enumerate_minimal_separators(g, budgets.max_separators);
  sk.pmcs = enumerate_pmcs(g, sk.separators, budgets.max_pmcs);
  sk.blocks = enumerate_full_blocks(g, sk.separators);
  sk.triples = enumerate_good_triples(g, sk.blocks, sk.pmcs);
  for (int b = 0; b < static_cast<int>(sk.blocks.size()); ++b)
    sk.block_by_component.emplace(sk.blocks[b].component, b);
  return sk;
}

Graph elimination_game(const Graph& g, std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != g.n())
    throw std::invalid_argument("elimination order must be a permutation of V");
  std::vector<VertexSet> adj(g.n());
  for (Vertex v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
  VertexSet eliminated;
  for (Vertex v : order) {
    g.check_vertex(v);
    if (eliminated.contains(v)) throw std::invalid_argument("elimination order repeats a vertex");
    VertexSet later = adj[v] - eliminated;
    for (Vertex u : later) adj[u] |= later - VertexSet{u};
    eliminated.insert(v);
  }
  Graph h(g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex w : adj[u])
      if (w > u) h.add_edge(u, w);
  return h;
}

std::vector<Graph> minimal_triangulations_small(const Graph& g) {
  if (g.n() > kTriangulationOracleLimit)
    throw SizeLimitExceeded("minimal_triangulations_small", g.n(), kTriangulationOracleLimit);
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::set<std::vector<Edge>> distinct;
  do {
    distinct.insert(elimination_game(g, order).edges());
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<std::vector<Edge>> all(distinct.begin(), distinct.end());
  std::vector<Graph> out;
  for (const auto& e : all) {
    bool minimal = true;
    for (const auto& f : all) {
      if (f.size() >= e.size()) continue;
      if (std::includes(e.begin(), e.end(), f.begin(), f.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.emplace_back(g.n(), e);
  }
  return out;
}

std::vector<VertexSet> maximal_cliques_small(const Graph& g) {
  std::vector<VertexSet> out;
  // Bron–Kerbosch with pivoting.
  auto expand = [&](auto& self, VertexSet r, VertexSet p, VertexSet x) -> void {
    if (p.empty()) {
      if (x.empty()) out.push_back(r);
      return;
    }
    Vertex pivot = (p | x).first();
    int best = -1;
    for (Vertex u : p | x) {
      int k = (p & g.neighbors(u)).size();
      if (k > best) best = k, pivot = u;
    }
    for (Vertex v : p - g.neighbors(pivot)) {
      VertexSet r2 = r;
      r2.insert(v);
      self(self, r2, p & g.neighbors(v), x & g.neighbors(v));
      p.erase(v);
      x.insert(v);
    }
  };
  if (g.n() > 0) expand(expand, {}, g.vertices(), {});
  std::sort(out.begin(), out.end());
  return out;
}

int exact_treewidth_small(const Graph& g) {
  const int n = g.n();
  if (n > kTreewidthOracleLimit) throw SizeLimitExceeded("exact_treewidth_small", n, kTreewidthOracleLimit);
  if (n == 0) return -1;
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  // q(S, v): vertices outside S ∪ {v} reachable from v through S.
  auto q_size = [&](std::uint32_t s, int v) {
    std::uint32_t reach = 1u << v, frontier = reach;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= s & ~reach;
      reach |= next;
      frontier = next;
    }
    std::uint32_t out = 0;
    for (std::uint32_t r = reach; r; r &= r - 1) out |= adj[std::countr_zero(r)];
    return std::popcount(out & ~reach);
  };
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<int> tw(std::size_t{1} << n, n);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = n;
    for (std::uint32_t bits = s; bits; bits &= bits - 1) {
      int v = std::countr_zero(bits);
      std::uint32_t rest = s & ~(1u << v);
      int cand = std::max(tw[rest], q_size(rest, v));
      best = std::min(best, cand);
    }
    tw[s] = best;
  }
  return tw[full];
}

}  // namespace pmcsolve
