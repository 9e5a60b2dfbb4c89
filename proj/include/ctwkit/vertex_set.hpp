#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ctwkit {

using Vertex = int;

/// Subset of the vertex range 0..universe-1, stored as a bitset.
///
/// Binary set operations require both operands to share the same universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : bits_(static_cast<std::size_t>(universe)) {}
  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  template <typename Range>
  static VertexSet from(int universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    s.bits_.set();
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }
  int count() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe() && bits_.test(static_cast<std::size_t>(v));
  }

  void insert(Vertex v) { bits_.set(static_cast<std::size_t>(v)); }
  void erase(Vertex v) { bits_.reset(static_cast<std::size_t>(v)); }
  void clear() { bits_.reset(); }

  bool subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

  /// Least member, or -1 when empty.
  Vertex first() const {
    auto p = bits_.find_first();
    return p == Bits::npos ? -1 : static_cast<Vertex>(p);
  }
  /// Least member greater than v, or -1.
  Vertex next(Vertex v) const {
    auto p = bits_.find_next(static_cast<std::size_t>(v));
    return p == Bits::npos ? -1 : static_cast<Vertex>(p);
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (Vertex v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (Vertex v = first(); v >= 0; v = next(v)) f(v);
  }

  VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

  /// Orders by sorted member list, so {0,5} < {1}.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    Vertex x = a.first();
    Vertex y = b.first();
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y;
      x = a.next(x);
      y = b.next(y);
    }
    return x < 0 && y >= 0;
  }

  std::size_t hash() const {
    std::size_t h = bits_.size();
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(bits_, std::back_inserter(blocks));
    for (auto b : blocks) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace ctwkit
