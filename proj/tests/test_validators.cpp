#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "snarkdom/certificates.hpp"
#include "snarkdom/validators.hpp"

using namespace snarkdom;

namespace {

VertexSet star_centers(const FlowerSnark& g) {
  VertexSet s(g.num_vertices());
  for (int i = 0; i < g.n(); ++i) s.set(vertex_id(i, Role::a));
  return s;
}

VertexSet random_set(const FlowerSnark& g, std::mt19937& rng, double density) {
  VertexSet s(g.num_vertices());
  std::bernoulli_distribution coin(density);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (coin(rng)) s.set(v);
  return s;
}

// Every subset of [0, V) of size <= max_size.
template <typename Fn>
void for_each_subset_upto(int V, int max_size, Fn&& fn) {
  VertexSet cur(V);
  auto rec = [&](auto&& self, int next, int remaining) -> void {
    fn(static_cast<const VertexSet&>(cur));
    if (remaining == 0) return;
    for (int v = next; v < V; ++v) {
      cur.set(v);
      self(self, v + 1, remaining - 1);
      cur.reset(v);
    }
  };
  rec(rec, 0, max_size);
}

// Definition-level minimality oracle: no proper subset dominates.
bool minimal_by_all_proper_subsets(const FlowerSnark& g, const VertexSet& s) {
  if (!is_dominating(g, s)) return false;
  const std::vector<int> members = s.to_vector();
  const int k = int(members.size());
  for (int mask = 0; mask < (1 << k) - 1; ++mask) {
    VertexSet sub(g.num_vertices());
    for (int j = 0; j < k; ++j)
      if (mask & (1 << j)) sub.set(members[j]);
    if (is_dominating(g, sub)) return false;
  }
  return true;
}

// All guard functions with the given total weight.
template <typename Fn>
void for_each_guard_function_of_weight(int V, int weight, Fn&& fn) {
  GuardFunction f(V);
  auto rec = [&](auto&& self, int v, int remaining) -> void {
    if (v == V) {
      if (remaining == 0) fn(static_cast<const GuardFunction&>(f));
      return;
    }
    for (int guards = 0; guards <= std::min(2, remaining); ++guards) {
      f.set(v, guards);
      self(self, v + 1, remaining - guards);
    }
    f.set(v, 0);
  };
  rec(rec, 0, weight);
}

}  // namespace

TEST_CASE("domination basics") {
  const auto g = build_flower_snark(5);
  CHECK(is_dominating(g, star_centers(g)));
  CHECK_FALSE(is_dominating(g, VertexSet(g.num_vertices())));
  CHECK(is_dominating(g, VertexSet::full(g.num_vertices())));
}

TEST_CASE("independent domination basics") {
  const auto g = build_flower_snark(5);
  CHECK(is_independent_dominating(g, star_centers(g)));
  CHECK_FALSE(is_independent_dominating(g, VertexSet::full(g.num_vertices())));

  VertexSet s = star_centers(g);
  s.set(vertex_id(0, Role::b));  // adjacent to a^1
  CHECK_FALSE(is_independent_dominating(g, s));
}

TEST_CASE("2-domination basics") {
  const auto g3 = build_flower_snark(3);
  CHECK(is_2_dominating(g3, two_dom_certificate(3)));
  CHECK_FALSE(is_2_dominating(g3, star_centers(g3)));  // each b^i sees one member only
  CHECK(is_2_dominating(g3, VertexSet::full(12)));
}

TEST_CASE("total domination basics") {
  const auto g4 = build_flower_snark(4);
  CHECK_FALSE(is_total_dominating(g4, star_centers(g4)));  // centers are unattended
  CHECK(is_total_dominating(g4, total_dom_certificate(4)));
  CHECK(is_total_dominating(g4, VertexSet::full(16)));
  CHECK_FALSE(is_total_dominating(g4, VertexSet(16)));
}

TEST_CASE("connected domination basics") {
  const auto g4 = build_flower_snark(4);
  CHECK(is_connected_dominating(g4, connected_dom_certificate(4)));
  CHECK_FALSE(is_connected_dominating(g4, star_centers(g4)));
  CHECK(is_connected_dominating(g4, VertexSet::full(16)));
}

TEST_CASE("minimal domination basics") {
  const auto g = build_flower_snark(5);
  CHECK(is_minimal_dominating(g, star_centers(g)));
  CHECK_FALSE(is_minimal_dominating(g, VertexSet::full(g.num_vertices())));
  const auto g4 = build_flower_snark(4);
  CHECK(is_minimal_dominating(g4, upper_dom_certificate(4)));
}

TEST_CASE("secure domination basics") {
  const auto g4 = build_flower_snark(4);
  CHECK(is_secure_dominating(g4, secure_dom_certificate(4)));
  CHECK(secure_dom_certificate(4).count() == 7);
  CHECK_FALSE(is_secure_dominating(g4, star_centers(g4)));
  CHECK(is_secure_dominating(g4, VertexSet::full(16)));
}

TEST_CASE("roman function basics") {
  const auto g = build_flower_snark(4);
  GuardFunction centers2(g.num_vertices());
  for (int i = 0; i < 4; ++i) centers2.set(vertex_id(i, Role::a), 2);
  CHECK(is_roman_function(g, centers2));
  CHECK(centers2.weight() == 8);

  GuardFunction ones(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) ones.set(v, 1);
  CHECK(is_roman_function(g, ones));

  CHECK_FALSE(is_roman_function(g, GuardFunction(g.num_vertices())));
}

TEST_CASE("undefended set") {
  const auto g = build_flower_snark(3);
  const GuardFunction zero(12);
  CHECK(undefended_set(g, zero) == VertexSet::full(12));

  GuardFunction ones(12);
  for (int v = 0; v < 12; ++v) ones.set(v, 1);
  CHECK(undefended_set(g, ones).empty());

  GuardFunction center(12);
  center.set(vertex_id(0, Role::a), 1);
  const VertexSet expected = g.closed_neighborhood(vertex_id(0, Role::a)).complemented();
  CHECK(undefended_set(g, center) == expected);
}

TEST_CASE("weak roman function basics") {
  const auto g = build_flower_snark(3);
  GuardFunction ones(12);
  for (int v = 0; v < 12; ++v) ones.set(v, 1);
  CHECK(is_weak_roman_function(g, ones));
  CHECK_FALSE(is_weak_roman_function(g, GuardFunction(12)));
}

TEST_CASE("roman implies weak roman: all functions of weight <= 6 at n = 3") {
  const auto g = build_flower_snark(3);
  int romans = 0;
  for (int w = 0; w <= 6; ++w) {
    for_each_guard_function_of_weight(12, w, [&](const GuardFunction& f) {
      if (is_roman_function(g, f)) {
        ++romans;
        CHECK(is_weak_roman_function(g, f));
      }
    });
  }
  CHECK(romans > 0);
}

TEST_CASE("secure domination equals weak roman on indicator functions") {
  std::mt19937 rng(101);
  for (int n : {3, 4}) {
    const auto g = build_flower_snark(n);
    for (int trial = 0; trial < 1000; ++trial) {
      const VertexSet s = random_set(g, rng, 0.15 + 0.07 * (trial % 10));
      const bool secure = is_secure_dominating(g, s);
      const bool weak = is_weak_roman_function(g, GuardFunction::indicator(s));
      CHECK(secure == weak);
    }
  }
}

TEST_CASE("monotone implication chain on random sets") {
  std::mt19937 rng(202);
  for (int n : {3, 4, 5}) {
    const auto g = build_flower_snark(n);
    for (int trial = 0; trial < 1000; ++trial) {
      const VertexSet s = random_set(g, rng, 0.15 + 0.07 * (trial % 10));
      if (is_secure_dominating(g, s)) CHECK(is_dominating(g, s));
      if (is_connected_dominating(g, s)) CHECK(is_dominating(g, s));
      if (is_2_dominating(g, s)) CHECK(is_dominating(g, s));
      if (!s.empty() && is_total_dominating(g, s)) CHECK(is_dominating(g, s));
      if (is_independent_dominating(g, s)) CHECK(is_dominating(g, s));
      if (is_minimal_dominating(g, s)) CHECK(is_dominating(g, s));
    }
  }
}

TEST_CASE("single-removal minimality equals the proper-subset definition") {
  const auto g = build_flower_snark(3);
  int dominating = 0;
  for_each_subset_upto(12, 6, [&](const VertexSet& s) {
    if (!is_dominating(g, s)) {
      CHECK_FALSE(is_minimal_dominating(g, s));
      return;
    }
    ++dominating;
    CHECK(is_minimal_dominating(g, s) == minimal_by_all_proper_subsets(g, s));
  });
  CHECK(dominating > 0);
}

TEST_CASE("validate dispatches and rejects kind mismatches") {
  const auto g = build_flower_snark(3);
  CHECK(validate(g, Variant::domination, Candidate(star_centers(g))));
  CHECK_FALSE(validate(g, Variant::total, Candidate(VertexSet(12))));

  GuardFunction ones(12);
  for (int v = 0; v < 12; ++v) ones.set(v, 1);
  CHECK(validate(g, Variant::weak_roman, Candidate(ones)));
  CHECK(validate(g, Variant::upper, Candidate(star_centers(g))));
  CHECK(validate(g, Variant::minimal, Candidate(star_centers(g))));

  CHECK_THROWS_AS(validate(g, Variant::roman, Candidate(star_centers(g))), std::invalid_argument);
  CHECK_THROWS_AS(validate(g, Variant::domination, Candidate(ones)), std::invalid_argument);
}

TEST_CASE("pattern matching: cyclic, reflected, and linear") {
  const std::vector<int> w1 = {1, 1, 1, 2, 2};
  CHECK(has_cyclic_pattern(w1, "111"));
  const std::vector<int> w2 = {1, 2, 1, 1, 1};
  CHECK(has_cyclic_pattern(w2, "111"));  // wraps around
  const std::vector<int> w3 = {1, 2, 1, 2, 1, 2};
  CHECK(has_cyclic_pattern(w3, "12121"));
  const std::vector<int> w4 = {3, 1, 2, 2, 1};
  CHECK(has_cyclic_pattern(w4, "1221"));
  CHECK(has_cyclic_pattern(w4, "213"));
  CHECK_FALSE(has_cyclic_pattern(w4, "11"));

  const std::vector<int> w5 = {1, 2, 3, 1, 4};
  CHECK(has_cyclic_pattern(w5, "32"));  // present in the reverse direction only

  const std::vector<int> w6 = {2, 1, 1, 1, 3};
  CHECK(has_cyclic_pattern(w6, "32"));        // only across the wrap
  CHECK_FALSE(has_pattern(w6, "32", false));  // absent linearly, both directions

  CHECK_THROWS_AS(has_cyclic_pattern(w1, "111111"), std::invalid_argument);
  CHECK_THROWS_AS(has_cyclic_pattern(w1, "1x1"), std::invalid_argument);
}

TEST_CASE("pattern matching agrees with a rotate-and-scan oracle") {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + int(rng() % 8);
    const int m = 1 + int(rng() % n);
    std::vector<int> weights(n);
    for (auto& w : weights) w = int(rng() % 5);
    std::string pattern;
    for (int j = 0; j < m; ++j) pattern += char('0' + rng() % 5);

    bool oracle = false;
    for (int reflect = 0; reflect < 2 && !oracle; ++reflect) {
      std::vector<int> view = weights;
      if (reflect) std::reverse(view.begin(), view.end());
      for (int rot = 0; rot < n && !oracle; ++rot) {
        bool match = true;
        for (int j = 0; j < m; ++j)
          if (view[(rot + j) % n] != pattern[j] - '0') match = false;
        oracle = match;
      }
    }
    CHECK(has_cyclic_pattern(weights, pattern) == oracle);
  }
}
