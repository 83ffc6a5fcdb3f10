#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "tdq/errors.hpp"

namespace tdq {

// A subset of the vertices {0, ..., n-1} of a fixed host graph, stored as a
// bit vector. All set algebra is word-parallel. Operands of binary operations
// must share the same universe size.
class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(int universe_size)
      : n_(universe_size), words_((universe_size + 63) / 64, 0) {}

  static VertexSet full(int universe_size) {
    VertexSet s(universe_size);
    for (int v = 0; v < universe_size; ++v) s.add(v);
    return s;
  }
  static VertexSet of(int universe_size, std::initializer_list<int> vertices) {
    VertexSet s(universe_size);
    for (int v : vertices) s.add(v);
    return s;
  }

  int universe_size() const { return n_; }

  bool contains(int v) const {
    check_range(v);
    return (words_[v >> 6] >> (v & 63)) & 1;
  }
  void add(int v) {
    check_range(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void remove(int v) {
    check_range(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  bool subset_of(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // -1 when empty.
  int first() const { return next(0); }
  // Smallest member >= v, or -1.
  int next(int v) const {
    if (v >= n_) return -1;
    std::size_t wi = static_cast<std::size_t>(v) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  // Lexicographic order on the ascending member lists: {0,3} < {1,2}.
  // This is the "bitmap order" used for deterministic certificates and
  // enumeration output everywhere in the library.
  static bool lex_less(const VertexSet& a, const VertexSet& b) {
    int x = a.first(), y = b.first();
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y;
      x = a.next(x + 1);
      y = b.next(y + 1);
    }
    return y >= 0;  // shorter prefix first
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for (int v = first(); v >= 0; v = next(v + 1)) {
      if (sep) s += ",";
      s += std::to_string(v);
      sep = true;
    }
    return s + "}";
  }

  struct iterator {
    const VertexSet* set;
    int v;
    int operator*() const { return v; }
    iterator& operator++() {
      v = set->next(v + 1);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v != o.v; }
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  void check_range(int v) const {
    if (v < 0 || v >= n_)
      throw OutOfRangeError("vertex " + std::to_string(v) + " out of range [0," +
                            std::to_string(n_) + ")");
  }
  void check_same(const VertexSet& o) const {
    if (n_ != o.n_) throw InvalidArgumentError("vertex sets over different universes");
  }
  void trim() {
    if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  int n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace tdq
