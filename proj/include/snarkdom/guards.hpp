#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "snarkdom/vertex_set.hpp"

namespace snarkdom {

// Per-vertex guard counts in {0, 1, 2}.  Used by the Roman and weak Roman
// domination variants; weight is the total number of guards.
class GuardFunction {
 public:
  GuardFunction() = default;

  explicit GuardFunction(int num_vertices) : counts_(num_vertices, 0) {}

  static GuardFunction indicator(const VertexSet& s) {
    GuardFunction f(s.universe_size());
    s.for_each([&](int v) { f.counts_[v] = 1; });
    return f;
  }

  int size() const { return int(counts_.size()); }

  int at(int v) const { return counts_.at(v); }

  void set(int v, int guards) {
    if (guards < 0 || guards > 2) throw std::invalid_argument("guard count must be 0, 1 or 2");
    counts_.at(v) = static_cast<std::uint8_t>(guards);
  }

  int weight() const {
    int w = 0;
    for (auto c : counts_) w += c;
    return w;
  }

  VertexSet positive_set() const {
    VertexSet s(size());
    for (int v = 0; v < size(); ++v)
      if (counts_[v] > 0) s.set(v);
    return s;
  }

  const std::vector<std::uint8_t>& values() const { return counts_; }
  std::vector<std::uint8_t>& values() { return counts_; }

  bool operator==(const GuardFunction&) const = default;

  // Canonical enumeration order: fewer two-guard vertices first, then the
  // two-guard sets compared as vertex sets, then the one-guard sets.
  bool lex_less(const GuardFunction& o) const {
    int t_a = 0, t_b = 0;
    for (auto c : counts_) t_a += (c == 2);
    for (auto c : o.counts_) t_b += (c == 2);
    if (t_a != t_b) return t_a < t_b;
    for (std::size_t v = 0; v < counts_.size(); ++v) {
      const bool a2 = counts_[v] == 2, b2 = o.counts_[v] == 2;
      if (a2 != b2) return a2;
    }
    for (std::size_t v = 0; v < counts_.size(); ++v) {
      const bool a1 = counts_[v] == 1, b1 = o.counts_[v] == 1;
      if (a1 != b1) return a1;
    }
    return false;
  }

 private:
  std::vector<std::uint8_t> counts_;
};

}  // namespace snarkdom
