#include "snarkdom/validators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace snarkdom {

bool is_dominating(const FlowerSnark& g, const VertexSet& s) {
  const int V = g.num_vertices();
  for (int v = 0; v < V; ++v)
    if (!s.intersects(g.closed_neighborhood(v))) return false;
  return true;
}

bool is_independent_dominating(const FlowerSnark& g, const VertexSet& s) {
  if (!is_dominating(g, s)) return false;
  bool independent = true;
  s.for_each([&](int v) {
    if (independent && s.intersects(g.open_neighborhood(v))) independent = false;
  });
  return independent;
}

bool is_2_dominating(const FlowerSnark& g, const VertexSet& s) {
  const int V = g.num_vertices();
  for (int v = 0; v < V; ++v) {
    if (s.test(v)) continue;
    if (s.intersection_count(g.open_neighborhood(v)) < 2) return false;
  }
  return true;
}

bool is_total_dominating(const FlowerSnark& g, const VertexSet& s) {
  const int V = g.num_vertices();
  for (int v = 0; v < V; ++v)
    if (!s.intersects(g.open_neighborhood(v))) return false;
  return true;
}

bool is_connected_dominating(const FlowerSnark& g, const VertexSet& s) {
  return is_dominating(g, s) && is_connected_induced(g, s);
}

bool is_minimal_dominating(const FlowerSnark& g, const VertexSet& s) {
  // s \ {w} stays dominating exactly when no vertex v has N[v] ∩ s = {w},
  // so minimality means every member holds some private neighbor.
  const int V = g.num_vertices();
  VertexSet with_private(V);
  for (int v = 0; v < V; ++v) {
    const VertexSet dominators = s & g.closed_neighborhood(v);
    const int c = dominators.count();
    if (c == 0) return false;  // not dominating at all
    if (c == 1) with_private.set(dominators.first());
  }
  return s.is_subset_of(with_private);
}

bool is_secure_dominating(const FlowerSnark& g, const VertexSet& s) {
  if (!is_dominating(g, s)) return false;
  const int V = g.num_vertices();
  VertexSet swapped(V);
  for (int v = 0; v < V; ++v) {
    if (s.test(v)) continue;
    bool defended = false;
    for (int w : g.neighbors(v)) {
      if (!s.test(w)) continue;
      swapped = s;
      swapped.reset(w);
      swapped.set(v);
      if (is_dominating(g, swapped)) {
        defended = true;
        break;
      }
    }
    if (!defended) return false;
  }
  return true;
}

bool is_roman_function(const FlowerSnark& g, const GuardFunction& f) {
  const int V = g.num_vertices();
  const auto& values = f.values();
  for (int v = 0; v < V; ++v) {
    if (values[v] != 0) continue;
    bool covered = false;
    for (int u : g.neighbors(v))
      if (values[u] == 2) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

VertexSet undefended_set(const FlowerSnark& g, const GuardFunction& f) {
  const int V = g.num_vertices();
  const auto& values = f.values();
  VertexSet out(V);
  for (int v = 0; v < V; ++v) {
    if (values[v] != 0) continue;
    bool guarded = false;
    for (int u : g.neighbors(v))
      if (values[u] != 0) {
        guarded = true;
        break;
      }
    if (!guarded) out.set(v);
  }
  return out;
}

namespace {

bool no_undefended(const FlowerSnark& g, const std::vector<std::uint8_t>& values) {
  const int V = g.num_vertices();
  for (int v = 0; v < V; ++v) {
    if (values[v] != 0) continue;
    bool guarded = false;
    for (int u : g.neighbors(v))
      if (values[u] != 0) {
        guarded = true;
        break;
      }
    if (!guarded) return false;
  }
  return true;
}

}  // namespace

bool is_weak_roman_function(const FlowerSnark& g, const GuardFunction& f) {
  const int V = g.num_vertices();
  std::vector<std::uint8_t> moved = f.values();
  for (int v = 0; v < V; ++v) {
    if (moved[v] != 0) continue;
    bool defended = false;
    for (int w : g.neighbors(v)) {
      if (moved[w] == 0) continue;  // a move needs a guard to take
      moved[v] = 1;
      --moved[w];
      if (no_undefended(g, moved)) defended = true;
      ++moved[w];
      moved[v] = 0;
      if (defended) break;
    }
    if (!defended) return false;
  }
  return true;
}

std::vector<int> copy_weights(const FlowerSnark& g, const GuardFunction& f) {
  std::vector<int> w(g.n(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) w[copy_of(v)] += f.at(v);
  return w;
}

SetPredicate set_predicate(Variant v) {
  switch (v) {
    case Variant::domination: return &is_dominating;
    case Variant::independent: return &is_independent_dominating;
    case Variant::two_domination: return &is_2_dominating;
    case Variant::total: return &is_total_dominating;
    case Variant::connected: return &is_connected_dominating;
    case Variant::minimal: return &is_minimal_dominating;
    case Variant::upper: return &is_minimal_dominating;
    case Variant::secure: return &is_secure_dominating;
    case Variant::roman:
    case Variant::weak_roman: break;
  }
  throw std::invalid_argument("variant takes a guard function, not a vertex set");
}

GuardPredicate guard_predicate(Variant v) {
  switch (v) {
    case Variant::roman: return &is_roman_function;
    case Variant::weak_roman: return &is_weak_roman_function;
    default: throw std::invalid_argument("variant takes a vertex set, not a guard function");
  }
}

bool validate(const FlowerSnark& g, Variant variant, const Candidate& candidate) {
  if (is_guard_variant(variant)) {
    const auto* f = std::get_if<GuardFunction>(&candidate);
    if (!f)
      throw std::invalid_argument(std::string(variant_name(variant)) +
                                  " expects a guard function candidate");
    return guard_predicate(variant)(g, *f);
  }
  const auto* s = std::get_if<VertexSet>(&candidate);
  if (!s)
    throw std::invalid_argument(std::string(variant_name(variant)) +
                                " expects a vertex set candidate");
  return set_predicate(variant)(g, *s);
}

namespace {

bool matches_at(std::span<const int> weights, std::span<const int> pattern, int offset,
                bool cyclic) {
  const int n = int(weights.size());
  for (int j = 0; j < int(pattern.size()); ++j) {
    const int idx = cyclic ? (offset + j) % n : offset + j;
    if (weights[idx] != pattern[j]) return false;
  }
  return true;
}

bool scan(std::span<const int> weights, std::span<const int> pattern, bool cyclic) {
  const int n = int(weights.size());
  const int m = int(pattern.size());
  const int offsets = cyclic ? n : n - m + 1;
  for (int off = 0; off < offsets; ++off)
    if (matches_at(weights, pattern, off, cyclic)) return true;
  return false;
}

}  // namespace

bool has_pattern(std::span<const int> weights, std::string_view pattern, bool cyclic) {
  if (int(pattern.size()) > int(weights.size()))
    throw std::invalid_argument("pattern longer than the weight vector");
  std::vector<int> digits;
  digits.reserve(pattern.size());
  for (char ch : pattern) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("pattern must be decimal digits");
    digits.push_back(ch - '0');
  }
  if (digits.empty()) return true;
  if (scan(weights, digits, cyclic)) return true;
  std::vector<int> reversed(digits.rbegin(), digits.rend());
  return scan(weights, reversed, cyclic);
}

bool has_cyclic_pattern(std::span<const int> weights, std::string_view pattern) {
  return has_pattern(weights, pattern, true);
}

}  // namespace snarkdom
