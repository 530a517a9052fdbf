#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace pmcsolve {

using Vertex = int;

/// Largest vertex count a VertexSet (and therefore a Graph) can hold.
inline constexpr int kMaxVertices = 256;

/// Fixed-capacity bit set over vertex ids 0..kMaxVertices-1.
///
/// Iteration visits members in increasing order, so the sorted id sequence
/// is the canonical encoding: two sets compare equal iff their members do.
///
/// The total order `<` is the lexicographic order of characteristic vectors
/// in which membership sorts first: A < B iff the smallest element of the
/// symmetric difference belongs to A. It agrees with lexicographic order of
/// sorted id sequences except that a proper prefix sorts after its
/// extensions. Unlike most orders on sets it is preserved under union with a
/// set disjoint from both operands, which is what the solver's tie-breaking
/// needs.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }
  template <class It>
  VertexSet(It first, It last) {
    for (; first != last; ++first) insert(*first);
  }

  /// {0, 1, ..., n-1}
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return s;
  }

  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1.
  Vertex first() const { return next(0); }
  /// Smallest member >= v, or -1.
  Vertex next(Vertex v) const {
    if (v >= kMaxVertices) return -1;
    int w = v >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (bits) return (w << 6) + std::countr_zero(bits);
      if (++w == kWords) return -1;
      bits = words_[w];
    }
  }
  /// Largest member, or -1.
  Vertex last() const {
    for (int w = kWords - 1; w >= 0; --w)
      if (words_[w]) return (w << 6) + 63 - std::countl_zero(words_[w]);
    return -1;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff) return (a.words_[w] >> std::countr_zero(diff)) & 1u;
    }
    return false;
  }
  friend bool operator>(const VertexSet& a, const VertexSet& b) { return b < a; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* s, Vertex v) : set_(s), v_(v) {}
    Vertex operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_ + 1);
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };
  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// "1 3 4" with ids shifted by `offset` (1 for human-facing output).
std::string format_set(const VertexSet& s, int offset = 1, char sep = ' ');

}  // namespace pmcsolve

template <>
struct std::hash<pmcsolve::VertexSet> {
  std::size_t operator()(const pmcsolve::VertexSet& s) const noexcept { return s.hash(); }
};
