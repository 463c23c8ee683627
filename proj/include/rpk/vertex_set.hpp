#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace rpk {

/// Hard upper limit on the order of any digraph handled by the library.
inline constexpr int kMaxVertices = 64;

/// A set of vertex indices in [0, 64), stored as a bitmask.
///
/// Iteration yields members in increasing index order. The canonical order
/// (operator<=>) sorts by cardinality first and then lexicographically by the
/// sorted member list, which is the order every enumeration in the library
/// reports its results in.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  static constexpr VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    s.bits_ = mask;
    return s;
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    return from_mask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static VertexSet singleton(int v) { return from_mask(std::uint64_t{1} << v); }

  std::uint64_t mask() const { return bits_; }
  bool contains(int v) const { return (bits_ >> v) & 1U; }
  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  /// Smallest member; the set must be nonempty.
  int front() const { return std::countr_zero(bits_); }

  bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }

  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

  friend std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    // The smaller first differing member decides the lexicographic order.
    return (a.bits_ & diff & -diff) ? std::strong_ordering::less
                                    : std::strong_ordering::greater;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// "{0, 3, 5}"
std::string to_string(VertexSet s);

}  // namespace rpk
