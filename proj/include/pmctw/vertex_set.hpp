#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace pmctw {

/// Largest vertex count supported by the fixed-width vertex sets.
inline constexpr int kMaxVertices = 256;

/// A set of vertex ids in [0, kMaxVertices), stored as a fixed array of
/// 64-bit words. All set algebra is word-parallel and allocation-free.
///
/// Ordering (operator<=>) is lexicographic on the sorted member lists,
/// which is the canonical order used for every family this library emits.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    Iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}

    int operator*() const { return pos_; }
    Iterator& operator++() {
      pos_ = set_->next_after(pos_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const Iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    int pos_ = -1;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> ids) {
    for (int v : ids) insert(v);
  }

  static VertexSet singleton(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  /// {0, 1, ..., n-1}
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64) {
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }
    return s;
  }

  static VertexSet from_members(const std::vector<int>& ids) {
    VertexSet s;
    for (int v : ids) s.insert(v);
    return s;
  }

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  /// Smallest member, or -1 when empty.
  int front() const {
    for (int w = 0; w < kWords; ++w) {
      if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
    }
    return -1;
  }

  /// Smallest member strictly greater than v, or -1.
  int next_after(int v) const {
    int pos = v + 1;
    if (pos >= kMaxVertices) return -1;
    int w = pos >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (pos & 63));
    while (true) {
      if (word != 0) return w * 64 + std::countr_zero(word);
      if (++w == kWords) return -1;
      word = words_[w];
    }
  }

  /// Removes and returns the smallest member; the set must be nonempty.
  int pop_front() {
    int v = front();
    erase(v);
    return v;
  }

  Iterator begin() const { return Iterator(this, front()); }
  Iterator end() const { return Iterator(this, -1); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (int w = 0; w < kWords; ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& other) const {
    for (int w = 0; w < kWords; ++w) {
      if ((words_[w] & other.words_[w]) != 0) return true;
    }
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
  /// Set difference.
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

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    VertexSet diff = a ^ b;
    int p = diff.front();
    if (p < 0) return std::strong_ordering::equal;
    // Both sets agree below p. The one holding p is smaller unless the other
    // has no members beyond p, in which case the other is a proper prefix.
    const VertexSet& holder = a.contains(p) ? a : b;
    const VertexSet& other = a.contains(p) ? b : a;
    bool holder_smaller = other.next_after(p) >= 0;
    bool a_smaller = (&holder == &a) == holder_smaller;
    return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto w : words_) {
      h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace pmctw
