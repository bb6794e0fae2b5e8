#ifndef EGS_VERTEX_SET_HPP
#define EGS_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace egs {

using Vertex = std::size_t;

/// Fixed-capacity set of vertex labels backed by `Words` 64-bit words.
///
/// Iteration visits members in ascending order. All operations are
/// constexpr-friendly and allocation free, so sets can be copied freely
/// between graph values.
template <std::size_t Words>
class VertexSet {
  static_assert(Words >= 1, "VertexSet needs at least one word");

 public:
  static constexpr std::size_t kWords = Words;
  static constexpr std::size_t kCapacity = 64 * Words;

  constexpr VertexSet() = default;

  /// The set {0, 1, ..., n-1}.
  static constexpr VertexSet prefix(std::size_t n) {
    VertexSet s;
    for (std::size_t w = 0; w < Words && n > 0; ++w) {
      if (n >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return s;
  }

  static constexpr VertexSet singleton(Vertex v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  constexpr void insert(Vertex v) { words_[v >> 6] |= bit(v); }
  constexpr void erase(Vertex v) { words_[v >> 6] &= ~bit(v); }
  constexpr bool contains(Vertex v) const {
    return v < kCapacity && (words_[v >> 6] & bit(v)) != 0;
  }

  constexpr std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  constexpr bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or kCapacity when empty.
  constexpr Vertex first() const { return scan_from(0); }

  /// Smallest member strictly greater than v, or kCapacity.
  constexpr Vertex next(Vertex v) const {
    if (v + 1 >= kCapacity) return kCapacity;
    return scan_from(v + 1);
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  constexpr VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Word-wise lexicographic order, lowest word first.
  friend constexpr auto operator<=>(const VertexSet&, const VertexSet&) = default;

  constexpr bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  constexpr bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  constexpr const std::array<std::uint64_t, Words>& words() const { return words_; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}
    constexpr Vertex operator*() const { return v_; }
    constexpr iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    constexpr iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend constexpr bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = kCapacity;
  };

  constexpr iterator begin() const { return iterator(this, first()); }
  constexpr iterator end() const { return iterator(this, kCapacity); }

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

  constexpr Vertex scan_from(Vertex start) const {
    std::size_t w = start >> 6;
    if (w >= Words) return kCapacity;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (word != 0) return (w << 6) + static_cast<Vertex>(std::countr_zero(word));
      if (++w == Words) return kCapacity;
      word = words_[w];
    }
  }

  std::array<std::uint64_t, Words> words_{};
};

}  // namespace egs

#endif  // EGS_VERTEX_SET_HPP
