// Packing automaton: every component of G[F] is isomorphic to a member of a
// fixed family H and holds exactly one vertex of X.
//
// A class keeps the private vertices whose component still reaches a
// terminal. They are grouped into pieces (components of the private
// vertices alone); each piece is stored in canonical form and the pieces are
// sorted, so the encoding is independent of how the graph was built.
// Components that lose their last terminal are checked on the spot and
// dropped.

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "automata_internal.hpp"

namespace pmcsolve::detail {

bool isomorphic_small(const Graph& a, const Graph& b) {
  int n = a.n();
  if (n != b.n() || a.m() != b.m()) return false;
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto& self, int v) -> bool {
    if (v == n) return true;
    for (int u = 0; u < n; ++u) {
      if (used[u] || da[v] != db[u]) continue;
      bool ok = true;
      for (int w = 0; w < v && ok; ++w) ok = a.adjacent(v, w) == b.adjacent(u, map[w]);
      if (!ok) continue;
      map[v] = u;
      used[u] = 1;
      if (self(self, v + 1)) return true;
      used[u] = 0;
    }
    return false;
  };
  return extend(extend, 0);
}

namespace {

struct PrivateVertex {
  Mask terminals = 0;  // adjacent terminal ranks
  bool in_x = false;
  std::vector<int> neighbors;  // other private vertices, by index
};

// Terminals are nodes 0..k-1, private vertices follow.
struct Expanded {
  int k = 0;
  std::vector<std::vector<int>> adj;
  std::vector<char> in_x;

  int size() const { return static_cast<int>(adj.size()); }
  void add_edge(int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
};

// Piece encoding: [size][per vertex: terminals u32, x byte, adjacency byte].
std::string encode_piece(const std::vector<PrivateVertex>& pv, const std::vector<int>& order) {
  std::vector<int> pos(pv.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::string out(1, static_cast<char>(order.size()));
  for (int v : order) {
    put_u32(out, pv[v].terminals);
    out.push_back(pv[v].in_x ? 1 : 0);
    std::uint8_t adj = 0;
    for (int u : pv[v].neighbors)
      if (pos[u] >= 0) adj |= std::uint8_t(1u << pos[u]);
    out.push_back(static_cast<char>(adj));
  }
  return out;
}

// Smallest encoding over orders that respect a (terminals, x, degree) sort.
std::string canonical_piece(const std::vector<PrivateVertex>& pv, std::vector<int> members) {
  auto key = [&](int v) {
    return std::tuple(pv[v].terminals, pv[v].in_x, pv[v].neighbors.size());
  };
  std::sort(members.begin(), members.end(), [&](int a, int b) { return key(a) < key(b); });
  std::vector<std::pair<int, int>> groups;  // [begin, end)
  for (std::size_t i = 0; i < members.size();) {
    std::size_t j = i;
    while (j < members.size() && key(members[j]) == key(members[i])) ++j;
    groups.emplace_back(static_cast<int>(i), static_cast<int>(j));
    i = j;
  }
  std::string best;
  auto walk = [&](auto& self, std::size_t g) -> void {
    if (g == groups.size()) {
      std::string enc = encode_piece(pv, members);
      if (best.empty() || enc < best) best = std::move(enc);
      return;
    }
    auto [b, e] = groups[g];
    std::sort(members.begin() + b, members.begin() + e);
    do {
      self(self, g + 1);
    } while (std::next_permutation(members.begin() + b, members.begin() + e));
  };
  walk(walk, 0);
  return best;
}

std::vector<PrivateVertex> decode(const std::string& payload) {
  std::vector<PrivateVertex> pv;
  std::size_t at = 0;
  while (at < payload.size()) {
    int size = label_at(payload, at++);
    int base = static_cast<int>(pv.size());
    for (int i = 0; i < size; ++i) {
      PrivateVertex v;
      v.terminals = get_u32(payload, at);
      v.in_x = payload[at + 4] != 0;
      std::uint8_t adj = label_at(payload, at + 5);
      for (int j = 0; j < size; ++j)
        if ((adj >> j) & 1u) v.neighbors.push_back(base + j);
      at += 6;
      pv.push_back(std::move(v));
    }
  }
  return pv;
}

Expanded expand(const Bag& w, Mask members, const std::vector<PrivateVertex>& pv) {
  Expanded ex;
  ex.k = w.size();
  ex.adj.assign(ex.k + pv.size(), {});
  ex.in_x.assign(ex.k + pv.size(), 0);
  for (int r = 0; r < ex.k; ++r) {
    ex.in_x[r] = (members >> r) & 1u;
    for (int s = r + 1; s < ex.k; ++s)
      if (w.adjacent(r, s)) ex.add_edge(r, s);
  }
  for (std::size_t i = 0; i < pv.size(); ++i) {
    int node = ex.k + static_cast<int>(i);
    ex.in_x[node] = pv[i].in_x;
    for (int r = 0; r < ex.k; ++r)
      if ((pv[i].terminals >> r) & 1u) ex.add_edge(node, r);
    for (int u : pv[i].neighbors)
      if (u > static_cast<int>(i)) ex.add_edge(node, ex.k + u);
  }
  return ex;
}

std::vector<std::vector<int>> node_components(const Expanded& ex, const std::vector<char>& allowed) {
  std::vector<int> comp(ex.size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < ex.size(); ++s) {
    if (!allowed[s] || comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int u : ex.adj[v])
        if (allowed[u] && comp[u] < 0) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

class PackingAutomaton final : public Automaton {
 public:
  PackingAutomaton(std::vector<Graph> family, std::string label)
      : family_(std::move(family)), label_(std::move(label)) {
    for (const Graph& h : family_) {
      if (h.n() == 0 || !h.is_connected()) throw std::invalid_argument("packing members must be connected");
      max_size_ = std::max(max_size_, h.n());
    }
  }

  std::string name() const override { return label_; }

  HClass base(const Bag& w, Mask members) const override {
    Expanded ex = expand(w, members, {});
    if (!open_ok(ex)) return HClass::rejected();
    return {false, members, {}};
  }

  HClass forget(const HClass& c, const Bag& from, const Bag& to) const override {
    if (c.reject) return c;
    auto fm = forget_map(from, to);
    auto pv = decode(c.payload);
    Expanded ex = expand(from, c.members, pv);
    std::vector<char> all(ex.size(), 1);
    // Close components that no longer touch a kept terminal.
    std::vector<char> keep(ex.size(), 0);
    for (const auto& comp : node_components(ex, all)) {
      bool live = false;
      for (int v : comp) live |= v < ex.k && fm.old_to_new[v] >= 0;
      if (live) {
        for (int v : comp) keep[v] = 1;
      } else if (!closed_ok(ex, comp)) {
        return HClass::rejected();
      }
    }
    // New private vertices: kept old private ones plus dropped terminals
    // from live components.
    std::vector<int> index(ex.size(), -1);
    std::vector<PrivateVertex> next;
    for (int v = 0; v < ex.size(); ++v) {
      if (!keep[v] || (v < ex.k && fm.old_to_new[v] >= 0)) continue;
      index[v] = static_cast<int>(next.size());
      next.push_back({0, ex.in_x[v] != 0, {}});
    }
    for (int v = 0; v < ex.size(); ++v) {
      if (index[v] < 0) continue;
      for (int u : ex.adj[v]) {
        if (index[u] >= 0) {
          next[index[v]].neighbors.push_back(index[u]);
        } else if (u < ex.k && fm.old_to_new[u] >= 0) {
          next[index[v]].terminals |= Mask{1} << fm.old_to_new[u];
        }
      }
    }
    return {false, remap_mask(c.members, fm.old_to_new), canonical(next)};
  }

  std::optional<HClass> join(const HClass& a, const HClass& b, const Bag& w) const override {
    if (a.reject || b.reject) return HClass::rejected();
    if (a.members != b.members) return std::nullopt;
    auto pv = decode(a.payload);
    auto pb = decode(b.payload);
    int shift = static_cast<int>(pv.size());
    for (auto& v : pb) {
      for (int& u : v.neighbors) u += shift;
      pv.push_back(std::move(v));
    }
    if (!open_ok(expand(w, a.members, pv))) return HClass::rejected();
    return HClass{false, a.members, canonical(pv)};
  }

  bool accepting(const HClass& c) const override { return !c.reject && c.payload.empty(); }

  bool holds(const Graph& g, const VertexSet& f, const VertexSet& x) const override {
    if (!x.is_subset_of(f)) return false;
    for (const VertexSet& comp : g.components(g.vertices() - f)) {
      if ((comp & x).size() != 1) return false;
      if (!matches(g.induced(comp))) return false;
    }
    return true;
  }

 protected:
  HClass lift(const HClass& c, const Bag& from, const Bag& to, Mask new_members) const override {
    if (c.reject) return c;
    auto map = embed_ranks(from, to);
    auto pv = decode(c.payload);
    for (auto& v : pv) v.terminals = remap_mask(v.terminals, map);
    return {false, remap_mask(c.members, map) | new_members, canonical(pv)};
  }

 private:
  bool matches(const Graph& comp) const {
    for (const Graph& h : family_)
      if (isomorphic_small(comp, h)) return true;
    return false;
  }

  bool open_ok(const Expanded& ex) const {
    std::vector<char> all(ex.size(), 1);
    for (const auto& comp : node_components(ex, all)) {
      if (static_cast<int>(comp.size()) > max_size_) return false;
      int xs = 0;
      for (int v : comp) xs += ex.in_x[v];
      if (xs > 1) return false;
    }
    return true;
  }

  bool closed_ok(const Expanded& ex, const std::vector<int>& comp) const {
    if (static_cast<int>(comp.size()) > max_size_) return false;
    int xs = 0;
    for (int v : comp) xs += ex.in_x[v];
    if (xs != 1) return false;
    Graph h(static_cast<int>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int u : ex.adj[comp[i]]) {
        auto j = std::lower_bound(comp.begin(), comp.end(), u) - comp.begin();
        if (static_cast<std::size_t>(j) > i) h.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    return matches(h);
  }

  static std::string canonical(const std::vector<PrivateVertex>& pv) {
    std::vector<int> comp(pv.size(), -1);
    std::vector<std::string> pieces;
    for (std::size_t s = 0; s < pv.size(); ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> members{static_cast<int>(s)};
      comp[s] = static_cast<int>(s);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (int u : pv[members[i]].neighbors)
          if (comp[u] < 0) {
            comp[u] = static_cast<int>(s);
            members.push_back(u);
          }
      pieces.push_back(canonical_piece(pv, std::move(members)));
    }
    std::sort(pieces.begin(), pieces.end());
    std::string out;
    for (const auto& p : pieces) out += p;
    return out;
  }

  std::vector<Graph> family_;
  std::string label_;
  int max_size_ = 0;
};

}  // namespace

std::unique_ptr<Automaton> make_packing(std::vector<Graph> family, std::string label) {
  return std::make_unique<PackingAutomaton>(std::move(family), std::move(label));
}

}  // namespace pmcsolve::detail
