#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace snb {

#ifndef SNB_MAX_VERTICES
#define SNB_MAX_VERTICES 128
#endif

inline constexpr int kMaxVertices = SNB_MAX_VERTICES;
inline constexpr int kWordCount = (kMaxVertices + 63) / 64;

// Fixed-capacity bitmask over vertex ids 0..kMaxVertices-1. Value type,
// cheap to copy; all set algebra is word-parallel.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  // {0, 1, ..., n-1}
  static VertexSet full(int n) {
    VertexSet s;
    for (int w = 0; w * 64 < n; ++w) {
      int hi = n - w * 64;
      s.words_[w] = hi >= 64 ? ~0ULL : ((1ULL << hi) - 1);
    }
    return s;
  }

  static VertexSet single(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
  void insert(int v) { words_[v >> 6] |= 1ULL << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  void clear() { words_.fill(0); }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWordCount; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWordCount; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWordCount; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Complement relative to {0..n-1}.
  VertexSet complement(int n) const {
    VertexSet s = full(n);
    s -= *this;
    return s;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWordCount; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWordCount; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (int i = 0; i < kWordCount; ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  // Smallest member, or -1 when empty.
  int first() const {
    for (int i = 0; i < kWordCount; ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return -1;
  }

  bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v : *this) out.push_back(v);
    return out;
  }

  // Iterates members in increasing order.
  class iterator {
   public:
    iterator(const VertexSet* s, int word) : set_(s), word_(word) { advance(); }
    int operator*() const { return word_ * 64 + std::countr_zero(bits_); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      if (!bits_) {
        ++word_;
        advance();
      }
      return *this;
    }
    bool operator!=(const iterator& o) const {
      return word_ != o.word_ || bits_ != o.bits_;
    }

   private:
    void advance() {
      while (word_ < kWordCount && !(bits_ = set_->words_[word_])) ++word_;
      if (word_ >= kWordCount) bits_ = 0;
    }
    const VertexSet* set_;
    int word_ = 0;
    std::uint64_t bits_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, kWordCount); }

  const std::array<std::uint64_t, kWordCount>& words() const { return words_; }

 private:
  std::array<std::uint64_t, kWordCount> words_{};
};

}  // namespace snb
