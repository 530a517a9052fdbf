// Forest and connectivity automata. Both require X = F and track, for the
// terminals, which of them are joined by private paths (paths whose inner
// vertices are not terminals).

#include <algorithm>
#include <stdexcept>

#include "automata_internal.hpp"

namespace pmcsolve::detail {
namespace {

// Private partition stored as restricted-growth labels over terminal ranks.
void apply_labels(UnionFind& uf, const std::string& labels, std::size_t offset, int width,
                  bool* redundant = nullptr) {
  std::vector<int> rep(width, -1);
  for (int r = 0; r < width; ++r) {
    int l = label_at(labels, offset + r);
    if (rep[l] < 0) {
      rep[l] = r;
    } else if (!uf.unite(rep[l], r) && redundant) {
      *redundant = true;
    }
  }
}

std::string labels_of(UnionFind& uf, int width) {
  std::vector<int> raw(width);
  for (int r = 0; r < width; ++r) raw[r] = uf.find(r);
  return canonical_labels(raw);
}

std::string singletons(int width) {
  std::vector<int> raw(width);
  std::iota(raw.begin(), raw.end(), 0);
  return canonical_labels(raw);
}

// Forgets terminals: private structure absorbs every edge touching a dropped
// terminal. Returns the union-find over `from` ranks.
UnionFind forget_partition(const std::string& labels, std::size_t offset, const Bag& from,
                           const ForgetMap& fm) {
  UnionFind uf(from.size());
  apply_labels(uf, labels, offset, from.size());
  for (int r = 0; r < from.size(); ++r)
    for (int s = r + 1; s < from.size(); ++s)
      if (from.adjacent(r, s) && (((fm.dropped >> r) | (fm.dropped >> s)) & 1u)) uf.unite(r, s);
  return uf;
}

std::string restrict_labels(UnionFind& uf, const ForgetMap& fm) {
  std::vector<int> raw(fm.new_to_old.size());
  for (std::size_t r = 0; r < raw.size(); ++r) raw[r] = uf.find(fm.new_to_old[r]);
  return canonical_labels(raw);
}

HClass lift_partition(const HClass& c, const Bag& from, const Bag& to, Mask new_members,
                      std::string prefix, std::size_t offset) {
  auto map = embed_ranks(from, to);
  Mask old = remap_mask(from.full(), map);
  if (new_members != (to.full() & ~old)) return HClass::rejected();
  std::vector<int> raw(to.size(), -1);
  for (int r = 0; r < from.size(); ++r) raw[map[r]] = label_at(c.payload, offset + r);
  int fresh = from.size();
  for (int r = 0; r < to.size(); ++r)
    if (raw[r] < 0) raw[r] = fresh++;
  return {false, to.full(), std::move(prefix) + canonical_labels(raw)};
}

std::size_t bell(int k) {
  // Bell triangle
  std::vector<std::size_t> row{1};
  for (int i = 0; i < k; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

class ForestAutomaton final : public Automaton {
 public:
  std::string name() const override { return "forest"; }

  HClass base(const Bag& w, Mask members) const override {
    if (members != w.full()) return HClass::rejected();
    UnionFind uf(w.size());
    for (int r = 0; r < w.size(); ++r)
      for (int s = r + 1; s < w.size(); ++s)
        if (w.adjacent(r, s) && !uf.unite(r, s)) return HClass::rejected();
    return {false, members, singletons(w.size())};
  }

  HClass forget(const HClass& c, const Bag& from, const Bag& to) const override {
    if (c.reject) return c;
    auto fm = forget_map(from, to);
    UnionFind uf = forget_partition(c.payload, 0, from, fm);
    return {false, to.full(), restrict_labels(uf, fm)};
  }

  std::optional<HClass> join(const HClass& a, const HClass& b, const Bag& w) const override {
    if (a.reject || b.reject) return HClass::rejected();
    if (a.members != b.members) return std::nullopt;
    UnionFind uf(w.size());
    bool cycle = false;
    apply_labels(uf, a.payload, 0, w.size(), &cycle);
    apply_labels(uf, b.payload, 0, w.size(), &cycle);
    if (cycle) return HClass::rejected();
    std::string merged = labels_of(uf, w.size());
    for (int r = 0; r < w.size(); ++r)
      for (int s = r + 1; s < w.size(); ++s)
        if (w.adjacent(r, s) && !uf.unite(r, s)) return HClass::rejected();
    return HClass{false, a.members, std::move(merged)};
  }

  bool accepting(const HClass& c) const override { return !c.reject; }

  bool holds(const Graph& g, const VertexSet& f, const VertexSet& x) const override {
    return f == x && g.induced(f).is_forest();
  }

  std::optional<std::size_t> class_bound(int t) const override {
    std::size_t total = 1;
    for (int k = 0; k <= t + 1; ++k) total += bell(k);
    return total;
  }

 protected:
  HClass lift(const HClass& c, const Bag& from, const Bag& to, Mask new_members) const override {
    if (c.reject) return c;
    return lift_partition(c, from, to, new_members, {}, 0);
  }
};

// Payload: [closed components (1 byte)][forgotten T vertices (u32 over T
// indices)][private partition labels].
class ConnectedAutomaton final : public Automaton {
 public:
  explicit ConnectedAutomaton(std::vector<Vertex> terminals) : terminals_(std::move(terminals)) {
    std::sort(terminals_.begin(), terminals_.end());
    if (terminals_.size() > 32) throw std::invalid_argument("connected supports at most 32 terminals");
  }

  std::string name() const override {
    std::string out = "connected:T=";
    for (std::size_t i = 0; i < terminals_.size(); ++i)
      out += (i ? "," : "") + std::to_string(terminals_[i] + 1);
    return out;
  }

  HClass base(const Bag& w, Mask members) const override {
    if (members != w.full()) return HClass::rejected();
    return {false, members, header(0, 0) + singletons(w.size())};
  }

  HClass forget(const HClass& c, const Bag& from, const Bag& to) const override {
    if (c.reject) return c;
    auto fm = forget_map(from, to);
    int closed = label_at(c.payload, 0);
    Mask seen = get_u32(c.payload, 1);
    UnionFind uf = forget_partition(c.payload, kHeader, from, fm);
    std::string labels = restrict_labels(uf, fm);
    // Full connectivity adds the remaining terminal-terminal edges.
    for (int r = 0; r < from.size(); ++r)
      for (int s = r + 1; s < from.size(); ++s)
        if (from.adjacent(r, s)) uf.unite(r, s);
    std::vector<char> live(from.size(), 0);
    for (int r = 0; r < to.size(); ++r) live[uf.find(fm.new_to_old[r])] = 1;
    for (int r = 0; r < from.size(); ++r) {
      if (!((fm.dropped >> r) & 1u)) continue;
      if (uf.find(r) == r && !live[r]) ++closed;
      seen |= terminal_bit(from.vertices[r]);
    }
    if (closed >= 2 || (closed >= 1 && to.size() > 0)) return HClass::rejected();
    return {false, to.full(), header(closed, seen) + labels};
  }

  std::optional<HClass> join(const HClass& a, const HClass& b, const Bag& w) const override {
    if (a.reject || b.reject) return HClass::rejected();
    if (a.members != b.members) return std::nullopt;
    int closed = label_at(a.payload, 0) + label_at(b.payload, 0);
    Mask seen = get_u32(a.payload, 1) | get_u32(b.payload, 1);
    if (closed >= 2 || (closed >= 1 && w.size() > 0)) return HClass::rejected();
    UnionFind uf(w.size());
    apply_labels(uf, a.payload, kHeader, w.size());
    apply_labels(uf, b.payload, kHeader, w.size());
    return HClass{false, a.members, header(closed, seen) + labels_of(uf, w.size())};
  }

  bool accepting(const HClass& c) const override {
    if (c.reject) return false;
    Mask all = terminals_.empty() ? 0 : static_cast<Mask>((std::uint64_t{1} << terminals_.size()) - 1);
    return label_at(c.payload, 0) == 1 && get_u32(c.payload, 1) == all;
  }

  bool holds(const Graph& g, const VertexSet& f, const VertexSet& x) const override {
    if (f != x || f.empty()) return false;
    for (Vertex v : terminals_)
      if (!f.contains(v)) return false;
    return g.induced(f).is_connected();
  }

  bool decomposable() const override { return false; }

 protected:
  HClass lift(const HClass& c, const Bag& from, const Bag& to, Mask new_members) const override {
    if (c.reject) return c;
    return lift_partition(c, from, to, new_members, c.payload.substr(0, kHeader), kHeader);
  }

 private:
  static constexpr std::size_t kHeader = 5;

  static std::string header(int closed, Mask seen) {
    std::string h(1, static_cast<char>(closed));
    put_u32(h, seen);
    return h;
  }

  Mask terminal_bit(Vertex v) const {
    auto it = std::lower_bound(terminals_.begin(), terminals_.end(), v);
    if (it == terminals_.end() || *it != v) return 0;
    return Mask{1} << (it - terminals_.begin());
  }

  std::vector<Vertex> terminals_;
};

}  // namespace

std::unique_ptr<Automaton> make_forest() { return std::make_unique<ForestAutomaton>(); }

std::unique_ptr<Automaton> make_connected(std::vector<Vertex> terminals) {
  return std::make_unique<ConnectedAutomaton>(std::move(terminals));
}

}  // namespace pmcsolve::detail
