#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace snarkdom {

// Fixed-universe bit vector over vertex ids [0, universe_size).
// All set operations stay closed over the universe.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe_size)
      : universe_(universe_size), words_((universe_size + 63) / 64, 0) {
    if (universe_size < 0) throw std::invalid_argument("VertexSet: negative universe");
  }

  static VertexSet full(int universe_size) {
    VertexSet s(universe_size);
    for (int v = 0; v < universe_size; ++v) s.set(v);
    return s;
  }

  int universe_size() const { return universe_; }

  bool test(int v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }

  void set(int v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

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

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complemented() const {
    VertexSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    return out;
  }

  // First member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        fn(int(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool operator==(const VertexSet&) const = default;

  // Canonical order: the set holding the first vertex at which the two
  // differ comes first.  For equal cardinalities this coincides with the
  // lexicographic order of k-subsets listed as ascending index tuples.
  bool lex_less(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t diff = words_[i] ^ o.words_[i];
      if (diff) {
        const std::uint64_t low = diff & (~diff + 1);
        return (words_[i] & low) != 0;
      }
    }
    return false;
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= universe_) throw std::out_of_range("VertexSet: vertex id out of range");
  }

  void trim() {
    const int spare = int(words_.size()) * 64 - universe_;
    if (spare > 0 && !words_.empty()) words_.back() &= ~std::uint64_t{0} >> spare;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace snarkdom
