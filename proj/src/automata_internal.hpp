#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "pmcsolve/automata.hpp"

namespace pmcsolve::detail {

inline constexpr std::uint8_t kNoLabel = 0xFF;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// false when already joined
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

/// Restricted-growth relabelling: first occurrence order, kNoLabel kept.
inline std::string canonical_labels(const std::vector<int>& raw) {
  std::string out(raw.size(), static_cast<char>(kNoLabel));
  std::vector<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0) continue;
    int label = -1;
    for (auto [r, l] : seen)
      if (r == raw[i]) label = l;
    if (label < 0) {
      label = static_cast<int>(seen.size());
      seen.emplace_back(raw[i], label);
    }
    out[i] = static_cast<char>(label);
  }
  return out;
}

inline std::uint8_t label_at(const std::string& s, std::size_t i) {
  return static_cast<std::uint8_t>(s[i]);
}

/// Bit positions of `to` ranks inside `from`, and the inverse map.
struct ForgetMap {
  std::vector<int> old_to_new;  // -1 for dropped
  std::vector<int> new_to_old;
  Mask dropped = 0;
};
ForgetMap forget_map(const Bag& from, const Bag& to);

void put_u32(std::string& s, std::uint32_t v);
std::uint32_t get_u32(const std::string& s, std::size_t at);

std::unique_ptr<Automaton> make_forest();
std::unique_ptr<Automaton> make_connected(std::vector<Vertex> terminals);
std::unique_ptr<Automaton> make_packing(std::vector<Graph> family, std::string label);
std::unique_ptr<Automaton> make_product(std::unique_ptr<Automaton> a, std::unique_ptr<Automaton> b,
                                        std::string name, bool decomposable);

/// Graph isomorphism for small graphs (backtracking with degree pruning).
bool isomorphic_small(const Graph& a, const Graph& b);

}  // namespace pmcsolve::detail
