#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "automata_internal.hpp"

namespace pmcsolve {

using detail::kNoLabel;

int Bag::rank_of(Vertex v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  return it != vertices.end() && *it == v ? static_cast<int>(it - vertices.begin()) : -1;
}

Mask Bag::mask_of(const VertexSet& s) const {
  Mask m = 0;
  for (int r = 0; r < size(); ++r)
    if (s.contains(vertices[r])) m |= Mask{1} << r;
  return m;
}

VertexSet Bag::to_set(Mask m) const {
  VertexSet s;
  for (int r = 0; r < size(); ++r)
    if ((m >> r) & 1u) s.insert(vertices[r]);
  return s;
}

Bag make_bag(const Graph& g, const VertexSet& w) {
  if (w.size() > kMaxTerminals)
    throw std::invalid_argument("terminal set of size " + std::to_string(w.size()) + " exceeds " +
                                std::to_string(kMaxTerminals));
  Bag b;
  b.vertices = w.to_vector();
  b.adjacency.assign(b.vertices.size(), 0);
  for (int r = 0; r < b.size(); ++r) b.adjacency[r] = b.mask_of(g.neighbors(b.vertices[r]));
  return b;
}

std::vector<int> embed_ranks(const Bag& sub, const Bag& super) {
  std::vector<int> map(sub.size());
  for (int r = 0; r < sub.size(); ++r) {
    map[r] = super.rank_of(sub.vertices[r]);
    if (map[r] < 0) throw std::invalid_argument("terminal set is not contained in its target");
  }
  return map;
}

Mask remap_mask(Mask m, std::span<const int> map) {
  Mask out = 0;
  for (std::size_t i = 0; i < map.size(); ++i)
    if (((m >> i) & 1u) && map[i] >= 0) out |= Mask{1} << map[i];
  return out;
}

std::uint64_t HClass::stable_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 0x100000001b3ull;
  };
  mix(reject ? 1 : 0);
  for (int i = 0; i < 4; ++i) mix(static_cast<std::uint8_t>(members >> (8 * i)));
  for (char c : payload) mix(static_cast<std::uint8_t>(c));
  return h;
}

VertexSet term(const HClass& c, const Bag& w) { return w.to_set(c.members); }

namespace detail {

ForgetMap forget_map(const Bag& from, const Bag& to) {
  ForgetMap fm;
  fm.old_to_new.assign(from.size(), -1);
  fm.new_to_old = embed_ranks(to, from);
  for (int r = 0; r < to.size(); ++r) fm.old_to_new[fm.new_to_old[r]] = r;
  for (int r = 0; r < from.size(); ++r)
    if (fm.old_to_new[r] < 0) fm.dropped |= Mask{1} << r;
  return fm;
}

void put_u32(std::string& s, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint32_t get_u32(const std::string& s, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{static_cast<std::uint8_t>(s[at + i])} << (8 * i);
  return v;
}

}  // namespace detail

std::optional<HClass> Automaton::introduce(const HClass& ci, const Bag& wi, const HClass& cw,
                                           const Bag& w) const {
  auto map = embed_ranks(wi, w);
  Mask shared = remap_mask(wi.full(), map);
  if (ci.reject || cw.reject) return HClass::rejected();
  if ((cw.members & shared) != remap_mask(ci.members, map)) return std::nullopt;
  return join(lift(ci, wi, w, cw.members & ~shared), cw, w);
}

bool accepts(const Automaton& a, const HClass& c, const Bag& w) {
  return a.accepting(a.forget(c, w, Bag{}));
}

namespace {

int popcount(Mask m) { return std::popcount(m); }

// Shared handling of the membership mask for automata whose payload is
// per-terminal.
Mask forget_members(Mask members, const detail::ForgetMap& fm) {
  return remap_mask(members, fm.old_to_new);
}

class TrueAutomaton final : public Automaton {
 public:
  std::string name() const override { return "true"; }
  HClass base(const Bag&, Mask members) const override { return {false, members, {}}; }
  HClass forget(const HClass& c, const Bag& from, const Bag& to) const override {
    if (c.reject) return c;
    return {false, forget_members(c.members, detail::forget_map(from, to)), {}};
  }
  std::optional<HClass> join(const HClass& a, const HClass& b, const Bag&) const override {
    if (a.reject || b.reject) return HClass::rejected();
    if (a.members != b.members) return std::nullopt;
    return a;
  }
  bool accepting(const HClass& c) const override { return !c.reject; }
  bool holds(const Graph&, const VertexSet& f, const VertexSet& x) const override {
    return x.is_subset_of(f);
  }
  std::optional<std::size_t> class_bound(int t) const override { return std::size_t{1} << (t + 2); }

 protected:
  HClass lift(const HClass& c, const Bag& from, const Bag& to, Mask new_members) const override {
    return {false, remap_mask(c.members, embed_ranks(from, to)) | new_members, {}};
  }
};

class IndependentSetAutomaton final : public Automaton {
 public:
  std::string name() const override { return "independent-set"; }
  HClass base(const Bag& w, Mask members) const override {
    for (int r = 0; r < w.size(); ++r)
      if (((members >> r) & 1u) && (w.adjacency[r] & members)) return HClass::rejected();
    return {false, members, {}};
  }
  HClass forget(const HClass& c, const Bag& from, const Bag& to) const override {
    if (c.reject) return c;
    return {false, forget_members(c.members, detail::forget_map(from, to)), {}};
  }
  std::optional<HClass> join(const HClass& a, const HClass& b, const Bag&) const override {
    if (a.reject || b.reject) return HClass::rejected();
    if (a.members != b.members) return std::nullopt;
    return a;
  }
  bool accepting(const HClass& c) const override { return !c.reject; }
  bool holds(const Graph& g, const VertexSet& f, const VertexSet& x) const override {
    if (!x.is_subset_of(f)) return false;
    for (Vertex v : x)
      if (g.neighbors(v).intersects(x)) return false;
    return true;
  }
  std::optional<std::size_t> class_bound(int t) const override { return std::size_t{1} << (t + 2); }

 protected:
  HClass lift(const HClass& c, const Bag& from, const Bag& to, Mask new_members) const override {
    return {false, remap_mask(c.members, embed_ranks(from, to)) | new_members, {}};
  }
};

// Payload: one byte per terminal rank, the number of X-neighbors behind the
// terminals (0 for non-members), saturating at d+1.
class MaxDegreeAutomaton final : public Automaton {
 public:
  explicit MaxDegreeAutomaton(int d) : d_(d) {
    if (d < 0) throw std::invalid_argument("max-degree needs d >= 0");
  }
  std::string name() const override { return "max-degree:d=" + std::to_string(d_); }

  HClass base(const Bag& w, Mask members) const override {
    for (int r = 0; r < w.size(); ++r)
      if (((members >> r) & 1u) && popcount(w.adjacency[r] & members) > d_) return HClass::rejected();
    return {false, members, std::string(w.size(), '\0')};
  }
  HClass forget(const HClass& c, const Bag& from, const Bag& to) const override {
    if (c.reject) return c;
    auto fm = detail::forget_map(from, to);
    std::string deg(to.size(), '\0');
    for (int r = 0; r < to.size(); ++r) {
      int old = fm.new_to_old[r];
      if (!((c.members >> old) & 1u)) continue;
      int k = detail::label_at(c.payload, old) + popcount(from.adjacency[old] & c.members & fm.dropped);
      deg[r] = static_cast<char>(std::min(k, d_ + 1));
    }
    return {false, forget_members(c.members, fm), std::move(deg)};
  }
  std::optional<HClass> join(const HClass& a, const HClass& b, const Bag& w) const override {
    if (a.reject || b.reject) return HClass::rejected();
    if (a.members != b.members) return std::nullopt;
    std::string deg(w.size(), '\0');
    for (int r = 0; r < w.size(); ++r) {
      int k = detail::label_at(a.payload, r) + detail::label_at(b.payload, r);
      if (((a.members >> r) & 1u) && k + popcount(w.adjacency[r] & a.members) > d_)
        return HClass::rejected();
      deg[r] = static_cast<char>(std::min(k, d_ + 1));
    }
    return HClass{false, a.members, std::move(deg)};
  }
  bool accepting(const HClass& c) const override { return !c.reject; }
  bool holds(const Graph& g, const VertexSet& f, const VertexSet& x) const override {
    if (!x.is_subset_of(f)) return false;
    for (Vertex v : x)
      if ((g.neighbors(v) & x).size() > d_) return false;
    return true;
  }

 protected:
  HClass lift(const HClass& c, const Bag& from, const Bag& to, Mask new_members) const override {
    auto map = embed_ranks(from, to);
    std::string deg(to.size(), '\0');
    for (int r = 0; r < from.size(); ++r) deg[map[r]] = c.payload[r];
    return {false, remap_mask(c.members, map) | new_members, std::move(deg)};
  }

 private:
  int d_;
};

// Payload: the sorted set of colorings of the X-terminals (restricted-growth
// label strings, one byte per rank) that extend to a proper q-coloring of
// G[X]. The empty set is the reject class.
class ColorableAutomaton final : public Automaton {
 public:
  explicit ColorableAutomaton(int q) : q_(q) {
    if (q < 1) throw std::invalid_argument("colorable needs q >= 1");
  }
  std::string name() const override { return "colorable:q=" + std::to_string(q_); }

  HClass base(const Bag& w, Mask members) const override {
    std::string start(w.size(), static_cast<char>(kNoLabel));
    std::set<std::string> out;
    extend(w, members, members, start, 0, 0, out);
    return pack(members, w.size(), out);
  }
  HClass forget(const HClass& c, const Bag& from, const Bag& to) const override {
    if (c.reject) return c;
    auto fm = detail::forget_map(from, to);
    std::set<std::string> out;
    for (const std::string& col : unpack(c, from.size())) {
      std::vector<int> raw(to.size(), -1);
      for (int r = 0; r < to.size(); ++r) {
        auto l = detail::label_at(col, fm.new_to_old[r]);
        if (l != kNoLabel) raw[r] = l;
      }
      out.insert(detail::canonical_labels(raw));
    }
    return pack(forget_members(c.members, fm), to.size(), out);
  }
  std::optional<HClass> join(const HClass& a, const HClass& b, const Bag& w) const override {
    if (a.reject || b.reject) return HClass::rejected();
    if (a.members != b.members) return std::nullopt;
    auto ca = unpack(a, w.size()), cb = unpack(b, w.size());
    std::set<std::string> out;
    std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::inserter(out, out.end()));
    return pack(a.members, w.size(), out);
  }
  bool accepting(const HClass& c) const override { return !c.reject; }
  bool holds(const Graph& g, const VertexSet& f, const VertexSet& x) const override {
    if (!x.is_subset_of(f)) return false;
    std::vector<Vertex> order = x.to_vector();
    std::vector<int> color(g.n(), -1);
    auto assign = [&](auto& self, std::size_t i, int used) -> bool {
      if (i == order.size()) return true;
      Vertex v = order[i];
      for (int col = 0; col < std::min(used + 1, q_); ++col) {
        bool ok = true;
        for (Vertex u : g.neighbors(v) & x)
          if (color[u] == col) ok = false;
        if (!ok) continue;
        color[v] = col;
        if (self(self, i + 1, std::max(used, col + 1))) return true;
        color[v] = -1;
      }
      return false;
    };
    return assign(assign, 0, 0);
  }

 protected:
  HClass lift(const HClass& c, const Bag& from, const Bag& to, Mask new_members) const override {
    auto map = embed_ranks(from, to);
    std::set<std::string> out;
    for (const std::string& col : unpack(c, from.size())) {
      std::string placed(to.size(), static_cast<char>(kNoLabel));
      int used = 0;
      for (int r = 0; r < from.size(); ++r) {
        placed[map[r]] = col[r];
        if (detail::label_at(col, r) != kNoLabel) used = std::max(used, detail::label_at(col, r) + 1);
      }
      // New terminals get no private edges, so any labelling is consistent;
      // properness against G[to] is enforced by the join with the base.
      extend_free(placed, new_members, 0, used, to.size(), out);
    }
    return pack(remap_mask(c.members, map) | new_members, to.size(), out);
  }

 private:
  void extend(const Bag& w, Mask members, Mask todo, std::string& cur, int rank, int used,
              std::set<std::string>& out) const {
    if (rank == w.size()) {
      out.insert(canonical(cur));
      return;
    }
    if (!((todo >> rank) & 1u)) {
      extend(w, members, todo, cur, rank + 1, used, out);
      return;
    }
    for (int col = 0; col < std::min(used + 1, q_); ++col) {
      bool ok = true;
      for (int r = 0; r < rank; ++r)
        if (((members >> r) & 1u) && w.adjacent(rank, r) && detail::label_at(cur, r) == col) ok = false;
      if (!ok) continue;
      cur[rank] = static_cast<char>(col);
      extend(w, members, todo, cur, rank + 1, std::max(used, col + 1), out);
      cur[rank] = static_cast<char>(kNoLabel);
    }
  }

  void extend_free(std::string& cur, Mask todo, int rank, int used, int size,
                   std::set<std::string>& out) const {
    if (rank == size) {
      out.insert(canonical(cur));
      return;
    }
    if (!((todo >> rank) & 1u)) {
      extend_free(cur, todo, rank + 1, used, size, out);
      return;
    }
    for (int col = 0; col < std::min(used + 1, q_); ++col) {
      cur[rank] = static_cast<char>(col);
      extend_free(cur, todo, rank + 1, std::max(used, col + 1), size, out);
    }
    cur[rank] = static_cast<char>(kNoLabel);
  }

  static std::string canonical(const std::string& labels) {
    std::vector<int> raw(labels.size(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (detail::label_at(labels, i) != kNoLabel) raw[i] = detail::label_at(labels, i);
    return detail::canonical_labels(raw);
  }

  static HClass pack(Mask members, int width, const std::set<std::string>& colorings) {
    if (colorings.empty()) return HClass::rejected();
    std::string payload;
    payload.reserve(colorings.size() * width + 1);
    for (const auto& c : colorings) payload += c;
    // A width-0 bag has exactly one (empty) coloring; keep it visible.
    if (width == 0) payload = "+";
    return {false, members, std::move(payload)};
  }

  static std::vector<std::string> unpack(const HClass& c, int width) {
    std::vector<std::string> out;
    if (width == 0) {
      out.emplace_back();
      return out;
    }
    for (std::size_t at = 0; at < c.payload.size(); at += width) out.push_back(c.payload.substr(at, width));
    return out;
  }

  int q_;
};

// Product of two automata over the same X; payload is
// [len(a) as u32][a payload][b payload].
class ProductAutomaton final : public Automaton {
 public:
  ProductAutomaton(std::unique_ptr<Automaton> a, std::unique_ptr<Automaton> b, std::string name,
                   bool decomposable)
      : a_(std::move(a)), b_(std::move(b)), name_(std::move(name)), decomposable_(decomposable) {}

  std::string name() const override { return name_; }
  HClass base(const Bag& w, Mask members) const override {
    return combine(a_->base(w, members), b_->base(w, members));
  }
  HClass forget(const HClass& c, const Bag& from, const Bag& to) const override {
    if (c.reject) return c;
    auto [x, y] = split(c);
    return combine(a_->forget(x, from, to), b_->forget(y, from, to));
  }
  std::optional<HClass> join(const HClass& p, const HClass& q, const Bag& w) const override {
    if (p.reject || q.reject) return HClass::rejected();
    auto [p1, p2] = split(p);
    auto [q1, q2] = split(q);
    auto x = a_->join(p1, q1, w);
    auto y = b_->join(p2, q2, w);
    if (!x || !y) return std::nullopt;
    return combine(*x, *y);
  }
  bool accepting(const HClass& c) const override {
    if (c.reject) return false;
    auto [x, y] = split(c);
    return a_->accepting(x) && b_->accepting(y);
  }
  bool holds(const Graph& g, const VertexSet& f, const VertexSet& x) const override {
    return a_->holds(g, f, x) && b_->holds(g, f, x);
  }
  bool decomposable() const override { return decomposable_; }

 protected:
  HClass lift(const HClass& c, const Bag& from, const Bag& to, Mask new_members) const override {
    if (c.reject) return c;
    auto [x, y] = split(c);
    return combine(lift_of(*a_, x, from, to, new_members), lift_of(*b_, y, from, to, new_members));
  }

 private:
  // lift() is protected; a derived class may only reach it through its own
  // base subobject, so forward through a helper with the right access.
  struct Access : Automaton {
    static HClass call(const Automaton& a, const HClass& c, const Bag& from, const Bag& to, Mask m) {
      return (a.*(&Access::lift))(c, from, to, m);
    }
  };
  static HClass lift_of(const Automaton& a, const HClass& c, const Bag& from, const Bag& to, Mask m) {
    return Access::call(a, c, from, to, m);
  }

  static HClass combine(const HClass& x, const HClass& y) {
    if (x.reject || y.reject) return HClass::rejected();
    HClass out{false, x.members, {}};
    detail::put_u32(out.payload, static_cast<std::uint32_t>(x.payload.size()));
    out.payload += x.payload;
    out.payload += y.payload;
    return out;
  }
  static std::pair<HClass, HClass> split(const HClass& c) {
    std::uint32_t len = detail::get_u32(c.payload, 0);
    return {HClass{false, c.members, c.payload.substr(4, len)},
            HClass{false, c.members, c.payload.substr(4 + len)}};
  }

  std::unique_ptr<Automaton> a_, b_;
  std::string name_;
  bool decomposable_;
};

std::string terminal_list(const std::vector<Vertex>& ts) {
  std::string out;
  for (Vertex v : ts) {
    if (!out.empty()) out += ',';
    out += std::to_string(v + 1);
  }
  return out;
}

}  // namespace

namespace detail {
std::unique_ptr<Automaton> make_product(std::unique_ptr<Automaton> a, std::unique_ptr<Automaton> b,
                                        std::string name, bool decomposable) {
  return std::make_unique<ProductAutomaton>(std::move(a), std::move(b), std::move(name), decomposable);
}
}  // namespace detail

Graph named_small_graph(std::string_view name) {
  if (name.size() < 2) throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
  int k = 0;
  try {
    k = std::stoi(std::string(name.substr(1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
  }
  Graph g;
  switch (name[0]) {
    case 'K':
      if (k < 1 || k > 8) break;
      return complete_graph(k);
    case 'P':
      if (k < 1 || k > 8) break;
      return path_graph(k);
    case 'C':
      if (k < 3 || k > 8) break;
      return cycle_graph(k);
    case 'S':
      if (k < 1 || k > 7) break;
      return star_graph(k);
    default:
      break;
  }
  throw std::invalid_argument("unknown or oversized graph name '" + std::string(name) + "'");
}

std::string PropertySpec::to_string() const {
  switch (kind) {
    case Kind::True:
      return "true";
    case Kind::IndependentSet:
      return "independent-set";
    case Kind::Forest:
      return "forest";
    case Kind::Colorable:
      return "colorable:q=" + std::to_string(q);
    case Kind::MaxDegree:
      return "max-degree:d=" + std::to_string(d);
    case Kind::Connected:
      return "connected:T=" + terminal_list(terminals);
    case Kind::Tree:
      return "tree:T=" + terminal_list(terminals);
    case Kind::Packing: {
      std::string out = "packing:H=";
      for (std::size_t i = 0; i < family.size(); ++i) out += (i ? "+" : "") + family[i];
      return out;
    }
  }
  return "?";
}

PropertySpec parse_property(std::string_view text) {
  auto colon = text.find(':');
  std::string head(text.substr(0, colon));
  std::string key, value;
  if (colon != std::string_view::npos) {
    std::string rest(text.substr(colon + 1));
    auto eq = rest.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value in '" + std::string(text) + "'");
    key = rest.substr(0, eq);
    value = rest.substr(eq + 1);
  }
  auto int_value = [&](const char* expected) {
    if (key != expected)
      throw std::invalid_argument("property '" + head + "' takes parameter " + expected);
    try {
      return std::stoi(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + value + "'");
    }
  };
  PropertySpec spec;
  if (head == "true") {
    spec.kind = PropertySpec::Kind::True;
    if (!key.empty()) int_value("t");  // accepted for symmetry with the problem catalog
  } else if (head == "independent-set") {
    spec.kind = PropertySpec::Kind::IndependentSet;
  } else if (head == "forest") {
    spec.kind = PropertySpec::Kind::Forest;
  } else if (head == "colorable") {
    spec.kind = PropertySpec::Kind::Colorable;
    if (!key.empty()) spec.q = int_value("q");
    if (spec.q < 1) throw std::invalid_argument("colorable needs q >= 1");
  } else if (head == "max-degree") {
    spec.kind = PropertySpec::Kind::MaxDegree;
    if (!key.empty()) spec.d = int_value("d");
    if (spec.d < 0) throw std::invalid_argument("max-degree needs d >= 0");
  } else if (head == "connected" || head == "tree") {
    spec.kind = head == "tree" ? PropertySpec::Kind::Tree : PropertySpec::Kind::Connected;
    if (!key.empty()) {
      if (key != "T") throw std::invalid_argument("property '" + head + "' takes parameter T");
      std::size_t at = 0;
      while (at <= value.size() && !value.empty()) {
        auto comma = value.find(',', at);
        std::string item = value.substr(at, comma == std::string::npos ? std::string::npos : comma - at);
        try {
          int v = std::stoi(item);
          if (v < 1) throw std::invalid_argument("");
          spec.terminals.push_back(v - 1);
        } catch (const std::exception&) {
          throw std::invalid_argument("bad terminal '" + item + "'");
        }
        if (comma == std::string::npos) break;
        at = comma + 1;
      }
      std::sort(spec.terminals.begin(), spec.terminals.end());
      spec.terminals.erase(std::unique(spec.terminals.begin(), spec.terminals.end()), spec.terminals.end());
    }
  } else if (head == "packing") {
    spec.kind = PropertySpec::Kind::Packing;
    if (key != "H") throw std::invalid_argument("packing takes parameter H");
    std::size_t at = 0;
    while (true) {
      auto plus = value.find('+', at);
      std::string item = value.substr(at, plus == std::string::npos ? std::string::npos : plus - at);
      named_small_graph(item);
      spec.family.push_back(item);
      if (plus == std::string::npos) break;
      at = plus + 1;
    }
  } else {
    throw std::invalid_argument("unknown property '" + head + "'");
  }
  return spec;
}

std::unique_ptr<Automaton> make_automaton(const PropertySpec& spec) {
  using Kind = PropertySpec::Kind;
  switch (spec.kind) {
    case Kind::True:
      return std::make_unique<TrueAutomaton>();
    case Kind::IndependentSet:
      return std::make_unique<IndependentSetAutomaton>();
    case Kind::Forest:
      return detail::make_forest();
    case Kind::Colorable:
      return std::make_unique<ColorableAutomaton>(spec.q);
    case Kind::MaxDegree:
      return std::make_unique<MaxDegreeAutomaton>(spec.d);
    case Kind::Connected:
      return detail::make_connected(spec.terminals);
    case Kind::Tree:
      return detail::make_product(detail::make_forest(), detail::make_connected(spec.terminals),
                                  spec.to_string(), false);
    case Kind::Packing: {
      std::vector<Graph> family;
      for (const auto& name : spec.family) family.push_back(named_small_graph(name));
      if (family.empty()) throw std::invalid_argument("packing needs a non-empty family");
      return detail::make_packing(std::move(family), spec.to_string());
    }
  }
  throw std::invalid_argument("unsupported property");
}

}  // namespace pmcsolve
