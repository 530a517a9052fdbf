#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmcsolve/graph.hpp"

namespace pmcsolve {

using Mask = std::uint32_t;
inline constexpr int kMaxTerminals = 32;

/// An ordered terminal set W together with the edges of G[W].
///
/// Every terminal graph the solver builds is an induced subgraph of the
/// input, so the edges among terminals are fixed by G. Classes therefore
/// describe only what lies behind the terminals ("private" structure) and
/// read terminal-terminal edges from the bag. Terminal rank i is the i-th
/// smallest vertex id.
struct Bag {
  std::vector<Vertex> vertices;
  std::vector<Mask> adjacency;

  int size() const { return static_cast<int>(vertices.size()); }
  Mask full() const { return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1; }
  int rank_of(Vertex v) const;
  Mask mask_of(const VertexSet& s) const;
  VertexSet to_set(Mask m = ~Mask{0}) const;
  bool adjacent(int r1, int r2) const { return (adjacency[r1] >> r2) & 1u; }
};

/// Throws std::invalid_argument beyond kMaxTerminals vertices.
Bag make_bag(const Graph& g, const VertexSet& w);

/// rank in `super` of each terminal of `sub` (which must be contained in it).
std::vector<int> embed_ranks(const Bag& sub, const Bag& super);
/// Re-indexes the bits of m through map (bit i -> bit map[i]; -1 drops it).
Mask remap_mask(Mask m, std::span<const int> map);

/// Homomorphism class of a pair (H, X) relative to its terminals.
///
/// `members` holds the terminal ranks in X, so term(c, W) can be read off
/// any class; payload is the automaton's canonical state encoding. Equal
/// semantics imply equal encodings, which is what lets classes key tables.
struct HClass {
  bool reject = false;
  Mask members = 0;
  std::string payload;

  static HClass rejected() { return HClass{true, 0, {}}; }
  /// FNV-1a over the encoding; stable across runs and platforms.
  std::uint64_t stable_hash() const;
  friend bool operator==(const HClass&, const HClass&) = default;
};

/// term(c, W): the terminals of W that lie in X.
VertexSet term(const HClass& c, const Bag& w);

struct HClassHash {
  std::size_t operator()(const HClass& c) const noexcept {
    return static_cast<std::size_t>(c.stable_hash());
  }
};

/// Parsed property syntax: `true`, `independent-set`, `forest`,
/// `colorable:q=3`, `max-degree:d=2`, `connected:T=1,4`, `tree:T=1,4`,
/// `packing:H=K2` (members joined with '+': `packing:H=K2+K3`). Vertex ids
/// in T are 1-based in the text and 0-based here.
struct PropertySpec {
  enum class Kind { True, IndependentSet, Forest, Colorable, MaxDegree, Connected, Tree, Packing };
  Kind kind = Kind::True;
  int q = 3;
  int d = 2;
  std::vector<Vertex> terminals;
  std::vector<std::string> family;  // packing member names

  std::string to_string() const;
};

PropertySpec parse_property(std::string_view text);

/// Named small connected graphs for packing families: Kn, Pn, Cn, Sn (star
/// with n leaves). At most 8 vertices.
Graph named_small_graph(std::string_view name);

/// A regular property realized as a finite-state machine over terminal
/// graph compositions.
///
/// All operations are pure; a rejected input always yields a rejected
/// output. Operations whose inputs disagree on the membership of shared
/// terminals are not valid compositions and return std::nullopt.
class Automaton {
 public:
  virtual ~Automaton() = default;

  virtual std::string name() const = 0;

  /// Class of the base graph G[W] with X = members.
  virtual HClass base(const Bag& w, Mask members) const = 0;
  /// Drops the terminals of `from` that are not in `to` (to ⊆ from).
  virtual HClass forget(const HClass& c, const Bag& from, const Bag& to) const = 0;
  /// ⊙ of the join g(W): glue two graphs on the same terminal set.
  virtual std::optional<HClass> join(const HClass& a, const HClass& b, const Bag& w) const = 0;
  /// ⊙ of in(W_i, W): glue a graph with terminals W_i ⊆ W onto the base
  /// graph G[W] whose class is `cw`.
  std::optional<HClass> introduce(const HClass& ci, const Bag& wi, const HClass& cw,
                                  const Bag& w) const;
  /// Whether a class over the empty terminal set is accepting.
  virtual bool accepting(const HClass& c) const = 0;

  /// Direct semantics: does P(G[F], X) hold?
  virtual bool holds(const Graph& g, const VertexSet& f, const VertexSet& x) const = 0;

  /// P(G[F], X) is the conjunction of P over the components of G[F].
  virtual bool decomposable() const { return true; }
  /// Upper bound on distinct classes over bags of at most t+1 terminals,
  /// when the automaton declares one.
  virtual std::optional<std::size_t> class_bound(int /*t*/) const { return std::nullopt; }

 protected:
  /// The class of (H plus the terminals to \ from as new vertices with no
  /// private edges, X plus new_members), over `to`. Only ever fed straight
  /// into join() with a base class, which supplies the edges of G[to].
  virtual HClass lift(const HClass& c, const Bag& from, const Bag& to, Mask new_members) const = 0;
};

std::unique_ptr<Automaton> make_automaton(const PropertySpec& spec);

/// accepting(forget(c, w -> ∅))
bool accepts(const Automaton& a, const HClass& c, const Bag& w);

/// Independent evaluation of the property definition.
inline bool semantic_eval(const Automaton& a, const Graph& g, const VertexSet& f,
                          const VertexSet& x) {
  return a.holds(g, f, x);
}

}  // namespace pmcsolve
